#include <doctest.h>

#include <limits>

#include "alcove/errors.hpp"
#include "alcove/laurent.hpp"

using namespace alcove;

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  LaurentPoly v = LaurentPoly::monomial(1, 1);
  LaurentPoly vinv = LaurentPoly::monomial(-1, 1);
  CHECK(v * vinv == LaurentPoly::constant(1));
  CHECK(LaurentPoly::z() == v - vinv);
  CHECK((v - v).is_zero());
  CHECK_FALSE((v - v).deg().has_value());
  CHECK(LaurentPoly::z().deg() == 1);
  CHECK(LaurentPoly::z().low_deg() == -1);
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::z_power(3).str() == "v^3 - 3v + 3v^-1 - v^-3");
  CHECK(LaurentPoly::constant(1).str() == "1");
}

TEST_CASE("z^n expands binomially") {
  for (unsigned n = 0; n <= 90; n += 15) {
    LaurentPoly p = LaurentPoly::z_power(n);
    for (unsigned k = 0; k <= n; ++k) {
      BigInt expect = binomial(n, k);
      if (k % 2) expect = -expect;
      CHECK(p.coeff(static_cast<int>(n) - 2 * static_cast<int>(k)) == expect);
    }
    CHECK(p.eval_at_one() == (n == 0 ? 1 : 0));
  }
  // Coefficients beyond 64 bits survive.
  CHECK(LaurentPoly::z_power(90).coeff(0) == -binomial(90, 45));
  CHECK(binomial(90, 45) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("rebasing in z round-trips") {
  LaurentPoly p = LaurentPoly::constant(3) + LaurentPoly::z_power(2) * LaurentPoly::constant(5) +
                  LaurentPoly::z_power(5) * LaurentPoly::constant(-2);
  auto c = p.rebase_in_z();
  CHECK(c.size() == 3);
  CHECK(c[0] == 3);
  CHECK(c[2] == 5);
  CHECK(c[5] == -2);
  LaurentPoly back;
  for (const auto& [k, coeff] : c) back += LaurentPoly::z_power(static_cast<unsigned>(k)) * LaurentPoly::constant(coeff);
  CHECK(back == p);
  CHECK_FALSE(p.in_nonnegative_z_span());
  CHECK((LaurentPoly::z_power(4) + LaurentPoly::z()).in_nonnegative_z_span());
  CHECK(LaurentPoly().rebase_in_z().empty());
}

TEST_CASE("non z-polynomials are rejected") {
  CHECK_THROWS_AS(LaurentPoly::monomial(1, 1).rebase_in_z(), IntegrityError);
  CHECK_THROWS_AS((LaurentPoly::monomial(2, 1) - LaurentPoly::monomial(-2, 1)).rebase_in_z(), IntegrityError);
  // v^2 + v^-2 = z^2 + 2 is fine.
  CHECK_NOTHROW((LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(-2, 1) - LaurentPoly::constant(2)).rebase_in_z());
}

TEST_CASE("multiplication distributes") {
  LaurentPoly a = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -4);
  LaurentPoly b = LaurentPoly::monomial(0, 7) + LaurentPoly::monomial(1, 1);
  LaurentPoly c = LaurentPoly::monomial(-3, 2);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
}
