#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "alcove/lattice.hpp"

using namespace alcove;

TEST_CASE("rational arithmetic normalizes and compares exactly") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(1, 2) == Rational(-1));
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK(Rational(3, 9).str() == "1/3");
  CHECK_THROWS_AS(Rational(1, 0), IntegrityError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), IntegrityError);
}

TEST_CASE("overflow is reported, never wrapped") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), IntegrityError);
  CHECK_THROWS_AS(big * Rational(2), IntegrityError);
}

namespace {

Int det2(const IntMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
}

}  // namespace

TEST_CASE("smith normal form: U A V = D, diagonal from determinantal divisors") {
  IntMatrix a(3, 3);
  const Int entries[9] = {2, 4, 4, -6, 6, 12, 10, -4, -16};
  for (std::size_t i = 0; i < 9; ++i) a.data[i] = entries[i];
  SmithForm s = smith_normal_form(a);

  IntMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = s.diagonal[i];
  CHECK(s.left * a * s.right == d);

  // d1 = gcd of entries, d1 d2 = gcd of 2x2 minors, d1 d2 d3 = |det|.
  Int g1 = 0, g2 = 0;
  for (Int x : a.data) g1 = std::gcd(g1, x);
  for (std::size_t r0 = 0; r0 < 3; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 3; ++r1)
      for (std::size_t c0 = 0; c0 < 3; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) g2 = std::gcd(g2, det2(a, r0, r1, c0, c1));
  Int det = a(0, 0) * det2(a, 1, 2, 1, 2) - a(0, 1) * det2(a, 1, 2, 0, 2) + a(0, 2) * det2(a, 1, 2, 0, 1);
  CHECK(std::abs(s.diagonal[0]) == g1);
  CHECK(std::abs(s.diagonal[0] * s.diagonal[1]) == g2);
  CHECK(std::abs(s.diagonal[0] * s.diagonal[1] * s.diagonal[2]) == std::abs(det));
  CHECK(s.rank == 3);
  CHECK(unimodular_inverse(s.left) * s.left == IntMatrix::identity(3));
}

TEST_CASE("image lattice membership") {
  // Columns (2,0) and (1,3): index 6 sublattice.
  IntMatrix g = IntMatrix::from_columns({{2, 0}, {1, 3}}, 2);
  ImageLattice L(g);
  CHECK(L.contains({2, 0}));
  CHECK(L.contains({3, 3}));
  CHECK(L.contains({0, 6}));
  CHECK_FALSE(L.contains({1, 0}));
  CHECK_FALSE(L.contains({0, 3}));
  CHECK(rational_rank(g) == 2);
}
