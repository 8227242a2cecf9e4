#include "alcove/root_datum.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

// Cartan matrices a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering.
struct CartanEntry {
  const char* type;
  const char* rows;
};

constexpr CartanEntry kCartanTable[] = {
    {"A1", "2"},
    {"A2", "2 -1;-1 2"},
    {"A3", "2 -1 0;-1 2 -1;0 -1 2"},
    {"A4", "2 -1 0 0;-1 2 -1 0;0 -1 2 -1;0 0 -1 2"},
    {"A5", "2 -1 0 0 0;-1 2 -1 0 0;0 -1 2 -1 0;0 0 -1 2 -1;0 0 0 -1 2"},
    {"A6", "2 -1 0 0 0 0;-1 2 -1 0 0 0;0 -1 2 -1 0 0;0 0 -1 2 -1 0;0 0 0 -1 2 -1;0 0 0 0 -1 2"},
    {"A7", "2 -1 0 0 0 0 0;-1 2 -1 0 0 0 0;0 -1 2 -1 0 0 0;0 0 -1 2 -1 0 0;0 0 0 -1 2 -1 0;0 0 0 0 -1 2 -1;0 0 0 0 0 -1 2"},
    {"B2", "2 -1;-2 2"},
    {"B3", "2 -1 0;-1 2 -1;0 -2 2"},
    {"B4", "2 -1 0 0;-1 2 -1 0;0 -1 2 -1;0 0 -2 2"},
    {"B5", "2 -1 0 0 0;-1 2 -1 0 0;0 -1 2 -1 0;0 0 -1 2 -1;0 0 0 -2 2"},
    {"C2", "2 -2;-1 2"},
    {"C3", "2 -1 0;-1 2 -2;0 -1 2"},
    {"C4", "2 -1 0 0;-1 2 -1 0;0 -1 2 -2;0 0 -1 2"},
    {"C5", "2 -1 0 0 0;-1 2 -1 0 0;0 -1 2 -1 0;0 0 -1 2 -2;0 0 0 -1 2"},
    {"D4", "2 -1 0 0;-1 2 -1 -1;0 -1 2 0;0 -1 0 2"},
    {"D5", "2 -1 0 0 0;-1 2 -1 0 0;0 -1 2 -1 -1;0 0 -1 2 0;0 0 -1 0 2"},
    {"E6", "2 0 -1 0 0 0;0 2 0 -1 0 0;-1 0 2 -1 0 0;0 -1 -1 2 -1 0;0 0 0 -1 2 -1;0 0 0 0 -1 2"},
    {"F4", "2 -1 0 0;-1 2 -1 0;0 -2 2 -1;0 0 -1 2"},
    {"G2", "2 -3;-1 2"},
};

// Named groups: name -> (Cartan type, lattice form).
struct NamedGroup {
  const char* name;
  const char* type;
  const char* form;  // "sc", "ad"
};

constexpr NamedGroup kNamedGroups[] = {
    {"Sp4", "C2", "sc"},
    {"SO5", "B2", "ad"},
    {"G2", "G2", "ad"},
};

constexpr std::size_t kMaxRoots = 512;
constexpr std::size_t kMultTableLimit = 1200;

std::vector<IntVec> parse_cartan(const char* rows) {
  std::vector<IntVec> out;
  std::istringstream all(rows);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::istringstream rs(row);
    IntVec r;
    Int x;
    while (rs >> x) r.push_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

const char* find_cartan(const std::string& type) {
  for (const auto& e : kCartanTable)
    if (type == e.type) return e.rows;
  return nullptr;
}

RootDatum from_cartan(const std::string& name, const std::vector<IntVec>& a, bool simply_connected) {
  const std::size_t l = a.size();
  std::vector<IntVec> roots(l, IntVec(l, 0));
  std::vector<IntVec> coroots(l, IntVec(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (simply_connected) {
        // X = Q with basis the simple coroots; alpha_j(alpha_i^vee) = a_ij.
        coroots[i][j] = (i == j) ? 1 : 0;
        roots[j][i] = a[i][j];
      } else {
        // X = P with basis the fundamental coweights.
        roots[i][j] = (i == j) ? 1 : 0;
        coroots[i][j] = a[i][j];
      }
    }
  return RootDatum::from_simple(name, l, std::move(roots), std::move(coroots));
}

RootDatum general_linear(std::size_t n) {
  std::vector<IntVec> roots, coroots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    roots.push_back(v);
    coroots.push_back(v);
  }
  return RootDatum::from_simple("GL" + std::to_string(n), n, std::move(roots), std::move(coroots));
}

bool is_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

bool is_nonpos(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x <= 0; });
}

IntVec perm_key(const std::vector<std::uint16_t>& perm, std::size_t l) {
  return IntVec(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(l));
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

RootDatum RootDatum::preset(const std::string& name) {
  auto number_after = [&](std::size_t prefix) -> std::size_t {
    std::string rest = name.substr(prefix);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw InputError("unknown preset '" + name + "'");
    return std::stoul(rest);
  };
  auto cartan_or_throw = [&](const std::string& type) {
    const char* rows = find_cartan(type);
    if (!rows) throw InputError("unsupported preset type '" + type + "' (rank out of catalog)");
    return parse_cartan(rows);
  };

  if (name.rfind("PGL", 0) == 0) {
    std::size_t n = number_after(3);
    if (n < 2) throw InputError("PGLn needs n >= 2");
    return from_cartan(name, cartan_or_throw("A" + std::to_string(n - 1)), false);
  }
  if (name.rfind("SL", 0) == 0) {
    std::size_t n = number_after(2);
    if (n < 2) throw InputError("SLn needs n >= 2");
    return from_cartan(name, cartan_or_throw("A" + std::to_string(n - 1)), true);
  }
  if (name.rfind("GL", 0) == 0) {
    std::size_t n = number_after(2);
    if (n < 1 || n > 8) throw InputError("GLn supported for 1 <= n <= 8");
    return general_linear(n);
  }
  for (const auto& g : kNamedGroups)
    if (name == g.name) return from_cartan(name, cartan_or_throw(g.type), std::string(g.form) == "sc");

  std::string type = name;
  bool sc = false;
  if (name.size() > 3 && name.substr(name.size() - 3) == "_sc") {
    type = name.substr(0, name.size() - 3);
    sc = true;
  } else if (name.size() > 3 && name.substr(name.size() - 3) == "_ad") {
    type = name.substr(0, name.size() - 3);
  }
  if (!find_cartan(type)) throw InputError("unknown preset '" + name + "'");
  return from_cartan(name, cartan_or_throw(type), sc);
}

std::vector<std::string> RootDatum::preset_names() {
  std::vector<std::string> out = {"SLn", "PGLn", "GLn"};
  for (const auto& g : kNamedGroups) out.emplace_back(g.name);
  for (const auto& e : kCartanTable) {
    out.emplace_back(e.type);
    out.push_back(std::string(e.type) + "_sc");
    out.push_back(std::string(e.type) + "_ad");
  }
  return out;
}

RootDatum RootDatum::from_simple(std::string name, std::size_t rank, std::vector<IntVec> simple_roots,
                                 std::vector<IntVec> simple_coroots) {
  if (rank == 0) throw InputError("rank must be positive");
  if (simple_roots.size() != simple_coroots.size())
    throw InputError("number of simple roots and simple coroots differ");
  if (simple_roots.size() > rank) throw InputError("more simple roots than the rank");
  if (simple_roots.size() > 63) throw InputError("semisimple rank too large");
  for (const auto& v : simple_roots)
    if (v.size() != rank) throw InputError("rank mismatch in simple root");
  for (const auto& v : simple_coroots)
    if (v.size() != rank) throw InputError("rank mismatch in simple coroot");

  const std::size_t l = simple_roots.size();
  RootDatum d;
  d.name_ = std::move(name);
  d.rank_ = rank;
  d.cartan_ = IntMatrix(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) d.cartan_(i, j) = dot(simple_coroots[i], simple_roots[j]);
  for (std::size_t i = 0; i < l; ++i) {
    if (d.cartan_(i, i) != 2) throw InputError("non-crystallographic pairing: <alpha_i^vee, alpha_i> != 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (d.cartan_(i, j) > 0) throw InputError("non-crystallographic pairing: positive off-diagonal Cartan entry");
      if ((d.cartan_(i, j) == 0) != (d.cartan_(j, i) == 0))
        throw InputError("non-crystallographic pairing: asymmetric zero pattern");
    }
  }
  if (rational_rank(d.cartan_) != l) throw InputError("Cartan matrix is singular (not of finite type)");

  d.generate_roots(simple_roots, simple_coroots);
  d.generate_weyl_group();
  d.compute_geometry();
  d.compute_fundamental_group();
  d.compute_hash();
  return d;
}

RootDatum RootDatum::from_explicit(const ExplicitDatum& spec, std::string name) {
  const std::size_t r = spec.rank;
  if (r == 0) throw InputError("rank must be positive");
  if (spec.roots.size() != spec.coroots.size()) throw InputError("roots and coroots differ in number");
  if (spec.roots.size() % 2 != 0) throw InputError("odd number of roots");
  for (const auto& v : spec.roots)
    if (v.size() != r) throw InputError("rank mismatch in root");
  for (const auto& v : spec.coroots)
    if (v.size() != r) throw InputError("rank mismatch in coroot");
  for (std::size_t k = 0; k < spec.roots.size(); ++k) {
    if (is_zero(spec.roots[k])) throw InputError("zero root");
    if (dot(spec.coroots[k], spec.roots[k]) != 2) throw InputError("non-crystallographic pairing: <alpha^vee, alpha> != 2");
  }

  // Change of basis into lattice coordinates: coroot coords B^{-1} a^vee,
  // root coords B^T a.
  std::vector<IntVec> roots = spec.roots;
  std::vector<IntVec> coroots = spec.coroots;
  if (spec.lattice_basis) {
    const auto& basis = *spec.lattice_basis;
    if (basis.size() != r) throw InputError("lattice basis must have rank many vectors");
    for (const auto& b : basis)
      if (b.size() != r) throw InputError("rank mismatch in lattice basis vector");
    IntMatrix bm = IntMatrix::from_columns(basis, r);
    auto binv = rational_inverse(bm);
    for (auto& a : roots) {
      IntVec c(r, 0);
      for (std::size_t j = 0; j < r; ++j) c[j] = dot(basis[j], a);
      a = c;
    }
    for (auto& a : coroots) {
      IntVec c(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Rational s;
        for (std::size_t j = 0; j < r; ++j) s += binv[i][j] * Rational(a[j]);
        if (!s.is_integer()) throw InputError("lattice does not contain the coroot lattice");
        c[i] = s.num();
      }
      a = c;
    }
  }

  std::vector<IntVec> sroots, scoroots;
  for (std::size_t i : spec.simple) {
    if (i >= roots.size()) throw InputError("simple index out of range");
    sroots.push_back(roots[i]);
    scoroots.push_back(coroots[i]);
  }
  RootDatum d = from_simple(std::move(name), r, std::move(sroots), std::move(scoroots));
  if (d.num_roots() != roots.size()) throw InputError("root set is not closed under the simple reflections");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto idx = d.find_root(roots[k]);
    if (!idx) throw InputError("root set is not closed under the simple reflections");
    if (d.coroot(*idx) != coroots[k]) throw InputError("coroot does not match its root");
  }
  return d;
}

void RootDatum::generate_roots(const std::vector<IntVec>& simple_roots, const std::vector<IntVec>& simple_coroots) {
  const std::size_t l = simple_roots.size();
  struct Entry {
    IntVec root, coroot, coeff;
  };
  std::vector<Entry> all;
  std::unordered_map<IntVec, std::size_t, VecHash> seen;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVec c(l, 0);
    c[i] = 1;
    if (seen.count(simple_roots[i])) throw InputError("repeated simple root");
    seen[simple_roots[i]] = all.size();
    queue.push_back(all.size());
    all.push_back({simple_roots[i], simple_coroots[i], c});
  }
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      const Entry e = all[cur];
      Int p = dot(simple_coroots[i], e.root);  // <alpha_i^vee, beta>
      Int q = dot(e.coroot, simple_roots[i]);  // <beta^vee, alpha_i>
      IntVec nr = e.root, nc = e.coroot, ncoef = e.coeff;
      for (std::size_t j = 0; j < rank_; ++j) {
        nr[j] = checked::sub(nr[j], checked::mul(p, simple_roots[i][j]));
        nc[j] = checked::sub(nc[j], checked::mul(q, simple_coroots[i][j]));
      }
      ncoef[i] = checked::sub(ncoef[i], p);
      auto it = seen.find(nr);
      if (it != seen.end()) {
        if (all[it->second].coroot != nc) throw InputError("inconsistent coroots: root system data is not reduced");
        continue;
      }
      if (all.size() >= kMaxRoots) throw InputError("root system is infinite or too large (not of finite type)");
      if (!is_nonneg(ncoef) && !is_nonpos(ncoef)) throw InputError("Cartan matrix is not of finite type");
      seen[nr] = all.size();
      queue.push_back(all.size());
      all.push_back({nr, nc, ncoef});
    }
  }

  auto height = [](const IntVec& c) { return std::accumulate(c.begin(), c.end(), Int{0}); };
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (height(all[k].coeff) > 0) pos.push_back(k);
  std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    Int ha = height(all[a].coeff), hb = height(all[b].coeff);
    if (ha != hb) return ha < hb;
    return all[a].coeff > all[b].coeff;
  });
  if (pos.size() * 2 != all.size()) throw InputError("roots are not symmetric under negation");

  for (std::size_t k : pos) {
    roots_.push_back(all[k].root);
    coroots_.push_back(all[k].coroot);
    coeffs_.push_back(all[k].coeff);
  }
  for (std::size_t k : pos) {
    roots_.push_back(-all[k].root);
    coroots_.push_back(-all[k].coroot);
    coeffs_.push_back(-all[k].coeff);
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    root_index_[roots_[k]] = k;
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (!root_index_.count(-roots_[k])) throw InputError("roots are not symmetric under negation");
  }
  simple_.resize(l);
  for (std::size_t i = 0; i < l; ++i) simple_[i] = root_index_.at(simple_roots[i]);
  for (std::size_t i = 0; i < l; ++i)
    if (simple_[i] != i) throw IntegrityError("simple roots are not first in root order");

  two_rho_.assign(rank_, 0);
  for (std::size_t k = 0; k < num_positive(); ++k) two_rho_ = two_rho_ + roots_[k];

  // Dynkin components and their highest roots.
  std::vector<int> comp(l, -1);
  for (std::size_t s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> q{s};
    comp[s] = static_cast<int>(components_.size());
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      members.push_back(x);
      for (std::size_t y = 0; y < l; ++y)
        if (comp[y] < 0 && cartan_(x, y) != 0) {
          comp[y] = comp[s];
          q.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(members);
  }
  for (const auto& c : components_) {
    std::size_t best = c.front();
    Int best_h = 0;
    for (std::size_t k = 0; k < num_positive(); ++k) {
      bool inside = true;
      for (std::size_t j = 0; j < l; ++j)
        if (coeffs_[k][j] != 0 && std::find(c.begin(), c.end(), j) == c.end()) inside = false;
      if (inside && height(coeffs_[k]) > best_h) {
        best_h = height(coeffs_[k]);
        best = k;
      }
    }
    highest_.push_back(best);
  }
}

std::optional<std::size_t> RootDatum::find_root(const IntVec& covector) const {
  auto it = root_index_.find(covector);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

void RootDatum::generate_weyl_group() {
  const std::size_t l = semisimple_rank();
  const std::size_t n = num_roots();

  // Simple reflections as permutations of root indices.
  std::vector<std::vector<std::uint16_t>> sperm(l, std::vector<std::uint16_t>(n));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Int p = dot(coroots_[i], roots_[k]);
      IntVec img = roots_[k];
      for (std::size_t j = 0; j < rank_; ++j) img[j] = checked::sub(img[j], checked::mul(p, roots_[i][j]));
      sperm[i][k] = static_cast<std::uint16_t>(root_index_.at(img));
    }

  // Breadth-first enumeration by left multiplication.
  std::vector<std::vector<std::uint16_t>> perms;
  std::unordered_map<IntVec, std::uint32_t, VecHash> index;
  std::vector<std::uint16_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  perms.push_back(id);
  index[perm_key(id, l)] = 0;
  std::vector<std::vector<std::uint32_t>> lmul(l);
  for (std::size_t cur = 0; cur < perms.size(); ++cur) {
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<std::uint16_t> np(n);
      for (std::size_t k = 0; k < n; ++k) np[k] = sperm[i][perms[cur][k]];
      auto key = perm_key(np, l);
      auto it = index.find(key);
      std::uint32_t idx;
      if (it == index.end()) {
        idx = static_cast<std::uint32_t>(perms.size());
        if (perms.size() > 200000) throw ResourceLimitError("Weyl group too large for the preset catalog");
        index[key] = idx;
        perms.push_back(std::move(np));
      } else {
        idx = it->second;
      }
      if (lmul[i].size() <= cur) lmul[i].resize(cur + 1);
      lmul[i][cur] = idx;
    }
  }
  const std::size_t order = perms.size();
  std::vector<std::uint32_t> len(order, 0);
  for (std::size_t w = 0; w < order; ++w)
    for (std::size_t k = 0; k < num_positive(); ++k)
      if (perms[w][k] >= num_positive()) ++len[w];

  // Lexicographically least reduced words, shortest elements first.
  std::vector<std::uint32_t> by_len(order);
  std::iota(by_len.begin(), by_len.end(), 0);
  std::stable_sort(by_len.begin(), by_len.end(), [&](auto a, auto b) { return len[a] < len[b]; });
  std::vector<std::vector<std::uint8_t>> words(order);
  for (std::uint32_t w : by_len) {
    if (len[w] == 0) continue;
    for (std::size_t i = 0; i < l; ++i) {
      std::uint32_t sw = lmul[i][w];
      if (len[sw] < len[w]) {
        words[w].push_back(static_cast<std::uint8_t>(i));
        words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
        break;
      }
    }
  }
  std::vector<std::uint32_t> order_idx(order);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](auto a, auto b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return words[a] < words[b];
  });
  std::vector<std::uint32_t> renum(order);
  for (std::uint32_t i = 0; i < order; ++i) renum[order_idx[i]] = i;

  elements_.resize(order);
  lmul_.assign(l, std::vector<std::uint32_t>(order));
  for (std::uint32_t old = 0; old < order; ++old) {
    auto& e = elements_[renum[old]];
    e.perm = std::move(perms[old]);
    e.word = std::move(words[old]);
    e.length = len[old];
    for (std::size_t i = 0; i < l; ++i) lmul_[i][renum[old]] = renum[lmul[i][old]];
  }
  for (std::uint32_t w = 0; w < order; ++w) perm_index_[perm_key(elements_[w].perm, l)] = w;

  // Inverses.
  for (std::uint32_t w = 0; w < order; ++w) {
    std::vector<std::uint16_t> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[elements_[w].perm[k]] = static_cast<std::uint16_t>(k);
    elements_[w].inverse = lookup(inv);
  }
  rmul_.assign(l, std::vector<std::uint32_t>(order));
  for (std::size_t i = 0; i < l; ++i)
    for (std::uint32_t w = 0; w < order; ++w) {
      // w s_i = (s_i w^{-1})^{-1}
      rmul_[i][w] = elements_[lmul_[i][elements_[w].inverse]].inverse;
    }

  // Matrices on X, built along the reduced words (shortest first).
  std::vector<IntMatrix> smat(l, IntMatrix::identity(rank_));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t a = 0; a < rank_; ++a)
      for (std::size_t b = 0; b < rank_; ++b)
        smat[i](a, b) = checked::sub(smat[i](a, b), checked::mul(coroots_[i][a], roots_[i][b]));
  elements_[0].matrix = IntMatrix::identity(rank_);
  for (std::uint32_t w = 1; w < order; ++w) {
    std::size_t i = elements_[w].word.front();
    std::uint32_t rest = lmul_[i][w];
    elements_[w].matrix = smat[i] * elements_[rest].matrix;
  }

  simple_refl_.resize(l);
  for (std::size_t i = 0; i < l; ++i) simple_refl_[i] = lmul_[i][0];
  longest_ = static_cast<std::uint32_t>(order - 1);
  if (elements_[longest_].length != num_positive()) throw IntegrityError("longest element has wrong length");

  if (order <= kMultTableLimit) {
    mul_table_.resize(order * order);
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b) {
        std::vector<std::uint16_t> p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = elements_[a].perm[elements_[b].perm[k]];
        mul_table_[a * order + b] = lookup(p);
      }
  }

  // Reflections s_beta = w s_i w^{-1} for beta = w(alpha_i).
  reflection_.assign(n, 0);
  std::vector<bool> done(n, false);
  for (std::uint32_t w = 0; w < order; ++w)
    for (std::size_t i = 0; i < l; ++i) {
      std::size_t beta = elements_[w].perm[i];
      if (done[beta]) continue;
      WeylElt r = mul(mul({w}, {simple_refl_[i]}), inverse({w}));
      reflection_[beta] = r.index;
      reflection_[negative_of(beta)] = r.index;
      done[beta] = done[negative_of(beta)] = true;
    }

  // Conjugacy classes of W.
  wclass_.assign(order, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (std::uint32_t w = 0; w < order; ++w) {
    if (wclass_[w] != std::numeric_limits<std::uint32_t>::max()) continue;
    std::deque<std::uint32_t> q{w};
    wclass_[w] = next;
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < l; ++i) {
        std::uint32_t y = rmul_[i][lmul_[i][x]];
        if (wclass_[y] == std::numeric_limits<std::uint32_t>::max()) {
          wclass_[y] = next;
          q.push_back(y);
        }
      }
    }
    ++next;
  }
}

std::uint32_t RootDatum::lookup(const std::vector<std::uint16_t>& perm) const {
  auto it = perm_index_.find(perm_key(perm, semisimple_rank()));
  if (it == perm_index_.end()) throw IntegrityError("permutation is not a Weyl group element");
  return it->second;
}

void RootDatum::compute_geometry() {
  const std::size_t l = semisimple_rank();
  fund_coweights_.assign(l, RatVec(rank_));
  if (l > 0) {
    auto m = rational_inverse(cartan_);  // rows: coefficients of varpi_i^vee in simple coroots
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) {
        if (m[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < rank_; ++j) fund_coweights_[i][j] += m[i][k] * Rational(coroots_[k][j]);
      }
  }
  base_barycenter_.assign(rank_, Rational(0));
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const IntVec& theta = coeffs_[highest_[c]];
    Rational share(1, static_cast<Int>(components_[c].size() + 1));
    for (std::size_t i : components_[c]) {
      Rational weight = share / Rational(theta[i]);
      base_barycenter_ = base_barycenter_ + scale(fund_coweights_[i], weight);
    }
  }
}

void RootDatum::compute_fundamental_group() {
  const std::size_t l = semisimple_rank();
  IntMatrix c(rank_, l);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < l; ++j) c(i, j) = coroots_[j][i];
  SmithForm snf = smith_normal_form(c);
  IntMatrix u = snf.left;
  for (std::size_t i = 0; i < rank_; ++i) {
    Int modulus;
    if (i < snf.rank) {
      modulus = snf.diagonal[i];
      if (modulus == 1) continue;
    } else {
      modulus = 0;
      // Free coordinate: fix the sign so the first nonzero entry is positive.
      for (std::size_t j = 0; j < rank_; ++j) {
        if (u(i, j) == 0) continue;
        if (u(i, j) < 0)
          for (std::size_t k = 0; k < rank_; ++k) u(i, k) = -u(i, k);
        break;
      }
    }
    pi1_rows_.push_back(u.row(i));
    pi1_moduli_.push_back(modulus);
    pi1_row_pos_.push_back(i);
  }
  pi1_section_ = unimodular_inverse(u);
}

IntVec RootDatum::kottwitz(const IntVec& lambda) const {
  IntVec out(pi1_rows_.size());
  for (std::size_t i = 0; i < pi1_rows_.size(); ++i) {
    Int v = dot(pi1_rows_[i], lambda);
    out[i] = pi1_moduli_[i] == 0 ? v : checked::mod(v, pi1_moduli_[i]);
  }
  return out;
}

IntVec RootDatum::kottwitz_lift(const IntVec& coords) const {
  if (coords.size() != pi1_rows_.size()) throw InputError("kappa has wrong number of coordinates");
  IntVec e(rank_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) e[pi1_row_pos_[i]] = coords[i];
  return pi1_section_.apply(e);
}

IntVec RootDatum::pi1_add(const IntVec& a, const IntVec& b) const {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int v = checked::add(a[i], b[i]);
    out[i] = pi1_moduli_[i] == 0 ? v : checked::mod(v, pi1_moduli_[i]);
  }
  return out;
}

bool RootDatum::pi1_has_free_part() const {
  return std::find(pi1_moduli_.begin(), pi1_moduli_.end(), 0) != pi1_moduli_.end();
}

void RootDatum::compute_hash() {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](Int v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (i * 8)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<Int>(rank_));
  mix(static_cast<Int>(roots_.size()));
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    for (Int x : roots_[k]) mix(x);
    for (Int x : coroots_[k]) mix(x);
  }
  for (std::size_t s : simple_) mix(static_cast<Int>(s));
  hash_ = h;
}

std::string RootDatum::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

// ---------------------------------------------------------------------------
// Weyl group

WeylElt RootDatum::mul(WeylElt a, WeylElt b) const {
  const std::size_t order = elements_.size();
  if (!mul_table_.empty()) return {mul_table_[a.index * order + b.index]};
  WeylElt r = a;
  for (std::uint8_t i : elements_[b.index].word) r = right_mul_simple(r, i);
  return r;
}

WeylElt RootDatum::from_word(std::span<const std::size_t> word) const {
  WeylElt r = identity();
  for (std::size_t i : word) {
    if (i >= semisimple_rank()) throw InputError("simple reflection index out of range");
    r = right_mul_simple(r, i);
  }
  return r;
}

std::uint64_t RootDatum::support(WeylElt w) const {
  std::uint64_t m = 0;
  for (std::uint8_t i : elements_[w.index].word) m |= (std::uint64_t{1} << i);
  return m;
}

std::size_t RootDatum::order(WeylElt w) const {
  std::size_t n = 1;
  WeylElt p = w;
  while (p.index != 0) {
    p = mul(p, w);
    ++n;
  }
  return n;
}

std::vector<WeylElt> RootDatum::elements() const {
  std::vector<WeylElt> out(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) out[i] = {i};
  return out;
}

std::string RootDatum::word_string(WeylElt w) const {
  std::string s;
  for (std::uint8_t i : elements_[w.index].word) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

bool RootDatum::is_dominant(const RatVec& x) const {
  for (std::size_t i = 0; i < semisimple_rank(); ++i)
    if (pairing(x, i).sign() < 0) return false;
  return true;
}

std::pair<RatVec, WeylElt> RootDatum::dominant_rep(const RatVec& x) const {
  RatVec v = x;
  WeylElt u = identity();
  while (true) {
    bool moved = false;
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      Rational p = pairing(v, i);
      if (p.sign() < 0) {
        for (std::size_t j = 0; j < rank_; ++j)
          if (coroots_[i][j] != 0) v[j] -= p * Rational(coroots_[i][j]);
        u = left_mul_simple(i, u);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, u};
  }
}

RatVec RootDatum::central_projection(const RatVec& x) const {
  RatVec out = x;
  for (std::size_t i = 0; i < semisimple_rank(); ++i) {
    Rational p = pairing(x, i);
    if (!p.is_zero()) out = out - scale(fund_coweights_[i], p);
  }
  return out;
}

std::size_t RootDatum::fixed_space_dim(WeylElt u) const {
  IntMatrix m = matrix(u);
  for (std::size_t i = 0; i < rank_; ++i) m(i, i) = checked::sub(m(i, i), 1);
  return rank_ - rational_rank(m);
}

}  // namespace alcove
