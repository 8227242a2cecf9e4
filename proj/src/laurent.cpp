#include "alcove/laurent.hpp"

#include "alcove/errors.hpp"

namespace alcove {

LaurentPoly LaurentPoly::monomial(int power, const BigInt& c) {
  LaurentPoly p;
  p.add_term(power, c);
  return p;
}

LaurentPoly LaurentPoly::z() {
  LaurentPoly p;
  p.add_term(1, 1);
  p.add_term(-1, -1);
  return p;
}

LaurentPoly LaurentPoly::z_power(unsigned k) {
  LaurentPoly p;
  BigInt binom = 1;
  for (unsigned j = 0; j <= k; ++j) {
    p.add_term(static_cast<int>(k) - 2 * static_cast<int>(j), (j % 2 == 0) ? binom : BigInt(-binom));
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

std::optional<int> LaurentPoly::deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPoly::low_deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

BigInt LaurentPoly::coeff(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

std::map<int, BigInt> LaurentPoly::rebase_in_z() const {
  std::map<int, BigInt> out;
  LaurentPoly rest = *this;
  while (!rest.is_zero()) {
    int d = *rest.deg();
    if (d < 0) throw IntegrityError("polynomial " + str() + " is not in Z[v - v^-1]");
    BigInt c = rest.coeff(d);
    out[d] = c;
    rest -= constant(c) * z_power(static_cast<unsigned>(d));
  }
  return out;
}

bool LaurentPoly::in_nonnegative_z_span() const {
  for (const auto& [k, c] : rebase_in_z())
    if (c < 0) return false;
  return true;
}

void LaurentPoly::add_term(int power, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || p == 0) s += mag.str();
    if (p != 0) {
      s += "v";
      if (p != 1) s += "^" + std::to_string(p);
    }
  }
  return s;
}

}  // namespace alcove
