#pragma once

// Laurent polynomials in v with arbitrary-precision integer coefficients.

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPoly monomial(int power, const BigInt& c);
  /// z = v − v^{-1}
  static LaurentPoly z();
  static LaurentPoly z_power(unsigned k);

  bool is_zero() const { return terms_.empty(); }
  /// Highest power; nullopt stands for −∞ (the zero polynomial).
  std::optional<int> deg() const;
  std::optional<int> low_deg() const;
  BigInt coeff(int power) const;
  const std::map<int, BigInt>& terms() const { return terms_; }

  /// Value at v = 1.
  BigInt eval_at_one() const;
  /// Coefficients c_k with p = Σ c_k (v − v^{-1})^k. Throws IntegrityError if p
  /// is not in Z[v − v^{-1}].
  std::map<int, BigInt> rebase_in_z() const;
  /// True iff every coefficient of rebase_in_z() is nonnegative.
  bool in_nonnegative_z_span() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "v^2 - 2 + v^-2"; "0" for zero.
  std::string str() const;

private:
  void add_term(int power, const BigInt& c);
  std::map<int, BigInt> terms_;  // no zero coefficients
};

}  // namespace alcove
