#pragma once

// Integer lattice linear algebra: Smith normal form, sublattice membership,
// and small exact rational solvers.

#include <optional>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `height`).
  static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t height);

  Int& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  IntVec apply(const IntVec& v) const;
  RatVec apply(const RatVec& v) const;
  IntVec row(std::size_t r) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix left;      // U
  IntMatrix right;     // V
  std::vector<Int> diagonal;  // min(rows, cols) entries
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Inverse of a unimodular matrix (exact, integer).
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Membership test for the image lattice A * Z^cols.
class ImageLattice {
public:
  explicit ImageLattice(const IntMatrix& generators);
  bool contains(const IntVec& v) const;

private:
  SmithForm snf_;
};

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

/// Solves sum_j x_j * columns[j] = target over Q; nullopt if inconsistent.
/// Columns are assumed linearly independent, so a solution is unique.
std::optional<RatVec> solve_in_span(const std::vector<IntVec>& columns, const RatVec& target);

/// Inverse of a square rational matrix given by integer rows; throws if singular.
std::vector<RatVec> rational_inverse(const IntMatrix& a);

}  // namespace alcove
