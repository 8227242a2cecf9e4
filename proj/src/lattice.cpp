#include "alcove/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace alcove {

std::string format_vec(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string format_vec(const RatVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ']';
  return os.str();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Int {
    if (s.empty()) throw InputError("empty rational component");
    std::string buf(s);
    char* end = nullptr;
    long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end == buf.c_str() || *end != '\0') throw InputError("malformed rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw InputError("rational with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), d);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t height) {
  IntMatrix m(height, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
  return m;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  IntVec out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if ((*this)(i, j) != 0) s = checked::add(s, checked::mul((*this)(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
  RatVec out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols; ++j)
      if ((*this)(i, j) != 0) s += Rational((*this)(i, j)) * v[j];
    out[i] = s;
  }
  return out;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = checked::add(c(i, j), checked::mul(x, b(k, j)));
    }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t j = 0; j < m.cols; ++j) m(dst, j) = checked::sub(m(dst, j), checked::mul(q, m(src, j)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, dst) = checked::sub(m(i, dst), checked::mul(q, m(i, src)));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows);
  IntMatrix v = IntMatrix::identity(a.cols);
  const std::size_t n = std::min(a.rows, a.cols);

  for (std::size_t t = 0; t < n; ++t) {
    bool found = false;
    while (true) {
      std::size_t pr = 0, pc = 0;
      Int best = 0;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j)
          if (d(i, j) != 0 && (best == 0 || std::llabs(d(i, j)) < best)) {
            best = std::llabs(d(i, j));
            pr = i;
            pc = j;
          }
      if (best == 0) break;
      found = true;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        Int q = d(i, t) / d(t, t);
        if (q != 0) {
          row_axpy(d, i, t, q);
          row_axpy(u, i, t, q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        Int q = d(t, j) / d(t, t);
        if (q != 0) {
          col_axpy(d, j, t, q);
          col_axpy(v, j, t, q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(u, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!found) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < u.cols; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = d(i, i);
    if (d(i, i) != 0) ++out.rank;
  }
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

std::vector<RatVec> rational_inverse(const IntMatrix& a) {
  if (a.rows != a.cols) throw PreconditionError("rational_inverse: matrix is not square");
  const std::size_t n = a.rows;
  std::vector<RatVec> m(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw InputError("matrix is singular");
    std::swap(m[p], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<RatVec> out(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  auto inv = rational_inverse(u);
  IntMatrix out(u.rows, u.cols);
  for (std::size_t i = 0; i < u.rows; ++i)
    for (std::size_t j = 0; j < u.cols; ++j) {
      if (!inv[i][j].is_integer()) throw IntegrityError("matrix is not unimodular");
      out(i, j) = inv[i][j].num();
    }
  return out;
}

ImageLattice::ImageLattice(const IntMatrix& generators) : snf_(smith_normal_form(generators)) {}

bool ImageLattice::contains(const IntVec& v) const {
  IntVec w = snf_.left.apply(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < snf_.rank) {
      if (w[i] % snf_.diagonal[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

std::size_t rational_rank(const IntMatrix& a) {
  std::vector<RatVec> m(a.rows, RatVec(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = Rational(a(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols && rank < a.rows; ++c) {
    std::size_t p = rank;
    while (p < a.rows && m[p][c].is_zero()) ++p;
    if (p == a.rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < a.cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_in_span(const std::vector<IntVec>& columns, const RatVec& target) {
  const std::size_t k = columns.size();
  const std::size_t h = target.size();
  std::vector<RatVec> m(h, RatVec(k + 1));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(columns[j][i]);
    m[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < h; ++c) {
    std::size_t p = row;
    while (p < h && m[p][c].is_zero()) ++p;
    if (p == h) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < h; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < h; ++r)
    if (!m[r][k].is_zero()) return std::nullopt;
  RatVec x(k);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][k];
  return x;
}

}  // namespace alcove
