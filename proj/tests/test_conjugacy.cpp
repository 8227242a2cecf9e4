#include <doctest.h>

#include <set>

#include "alcove/conjugacy.hpp"

using namespace alcove;

namespace {

std::vector<AffElt> ball(const AffineWeylGroup& a, std::size_t max_len) {
  std::vector<AffElt> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const auto& kappa : a.kappa_window(0))
      for (const auto& w : *a.elements_of_length(kappa, len)) out.push_back(w);
  return out;
}

// nu_w = dominant representative of (w^N translation) / N with N = |W|.
RatVec newton_oracle(const AffineWeylGroup& a, const AffElt& w) {
  const RootDatum& d = a.datum();
  const std::size_t n = d.weyl_order();
  AffElt p = a.power(w, n);
  REQUIRE(p.finite == d.identity());
  RatVec v;
  for (Int c : p.translation) v.push_back(Rational(c, static_cast<Int>(n)));
  return d.dominant_rep(v).first;
}

}  // namespace

TEST_CASE("Newton point against w^|W|") {
  for (std::string name : {"SL3", "PGL3", "C2", "G2", "GL3"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    ConjugacyClasses c(a);
    for (const auto& w : ball(a, 4)) CHECK(c.newton(w) == newton_oracle(a, w));
  }
}

TEST_CASE("straight means l(w^n) = n l(w)") {
  for (std::string name : {"SL3", "PGL3", "C2"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    ConjugacyClasses c(a);
    for (const auto& w : ball(a, 5)) {
      bool oracle = true;
      for (std::size_t n = 2; n <= 2 * d.weyl_order(); ++n)
        if (a.length(a.power(w, n)) != n * a.length(w)) oracle = false;
      CHECK(c.is_straight(w) == oracle);
    }
  }
}

TEST_CASE("conjugation preserves class, minimize lands on a minimal conjugate") {
  for (std::string name : {"SL3", "PGL3", "C2"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    ConjugacyClasses c(a);
    auto elts = ball(a, 4);
    auto conjugators = ball(a, 2);
    for (std::size_t i = 0; i < elts.size(); i += 2) {
      const AffElt& w = elts[i];
      auto m = c.minimize(w);
      CHECK(c.is_minimal(m.min_elt));
      CHECK(a.length(m.min_elt) <= a.length(w));
      CHECK(c.are_conjugate(w, m.min_elt));
      AffElt cur = w;
      for (const auto& step : m.chain) {
        CHECK(step.element == cur);
        cur = a.conj_by_simple(step.simple, cur);
        CHECK(static_cast<long>(a.length(cur)) - static_cast<long>(a.length(step.element)) == step.length_delta);
      }
      for (const auto& x : conjugators) {
        AffElt y = a.conj(x, w);
        CHECK(c.are_conjugate(w, y));
        CHECK(c.class_of(y)->rep == c.class_of(w)->rep);
      }
    }
  }
}

TEST_CASE("different invariants are never conjugate; equal invariants on A1 classes") {
  RootDatum d = RootDatum::preset("SL2");
  AffineWeylGroup a(d);
  ConjugacyClasses c(a);
  auto elts = ball(a, 5);
  for (const auto& x : elts)
    for (const auto& y : elts)
      if (c.class_invariant(x) != c.class_invariant(y)) CHECK_FALSE(c.are_conjugate(x, y));
  // s0 and s1 share f = (0, 0) but are not conjugate in the simply connected case.
  CHECK_FALSE(c.are_conjugate(a.parse_key("s0"), a.parse_key("s1")));
  CHECK(c.are_conjugate(a.parse_key("s0"), a.parse_key("s1 s0 s1")));
  CHECK(c.are_conjugate(a.parse_key("s1"), a.parse_key("s1 s0 s1 s0 s1")));
  CHECK_FALSE(c.are_conjugate(a.parse_key("s0"), a.parse_key("s1 s0 s1 s0 s1")));
}

TEST_CASE("class counts on A1") {
  // SL2: 1, s0, s1 and t^{k alpha^vee} (k >= 1, min length 2k).
  // PGL2: s0 ~ s1 via Omega, the coroot translations, and on the odd component
  // tau and the odd coweight translations (min length k).
  RootDatum sl2 = RootDatum::preset("SL2");
  RootDatum pgl2 = RootDatum::preset("PGL2");
  AffineWeylGroup a1(sl2), a2(pgl2);
  ConjugacyClasses c1(a1), c2(a2);
  for (std::size_t L = 0; L <= 9; ++L) {
    CAPTURE(L);
    CHECK(c1.enumerate_classes(L).size() == (L >= 1 ? 3 : 1) + L / 2);
    CHECK(c2.enumerate_classes(L).size() == (L >= 1 ? 2 : 1) + L / 2 + 1 + (L + 1) / 2);
  }
}

TEST_CASE("class registry entries are consistent") {
  RootDatum d = RootDatum::preset("C2");
  AffineWeylGroup a(d);
  ConjugacyClasses c(a);
  for (const auto& cls : c.enumerate_classes(5)) {
    CHECK(cls->minimal_elements.front() == cls->rep);
    CHECK(std::is_sorted(cls->minimal_elements.begin(), cls->minimal_elements.end()));
    for (const auto& m : cls->minimal_elements) {
      CHECK(a.length(m) == cls->min_length);
      CHECK(c.class_invariant(m) == cls->invariant);
      CHECK(c.is_minimal(m));
    }
    CHECK(cls->straight == (static_cast<Rational>(static_cast<Int>(cls->min_length)) ==
                            d.two_rho_pairing(cls->invariant.newton)));
    CHECK(c.find_class(cls->rep) == cls);
  }
}

TEST_CASE("straight classes are in bijection with invariants") {
  for (std::string name : {"SL3", "PGL3", "C2", "G2"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    ConjugacyClasses c(a);
    auto straight = c.straight_classes(6);
    std::set<ClassInvariant> seen;
    for (const auto& cls : straight) {
      CHECK(cls->straight);
      CHECK(seen.insert(cls->invariant).second);
    }
  }
}

TEST_CASE("invariant order") {
  RootDatum d = RootDatum::preset("SL3");
  AffineWeylGroup a(d);
  ConjugacyClasses c(a);
  auto straight = c.straight_classes(6);
  for (const auto& x : straight) {
    CHECK(c.invariant_leq(x->invariant, x->invariant));
    for (const auto& y : straight) {
      if (c.invariant_leq(x->invariant, y->invariant) && c.invariant_leq(y->invariant, x->invariant))
        CHECK(x->invariant == y->invariant);
      // nu <= nu' forces <nu, 2rho> <= <nu', 2rho>.
      if (c.invariant_leq(x->invariant, y->invariant))
        CHECK(d.two_rho_pairing(x->invariant.newton) <= d.two_rho_pairing(y->invariant.newton));
    }
  }
  ClassInvariant basic{IntVec{}, RatVec(2, Rational(0))};
  for (const auto& x : straight) CHECK(c.invariant_leq(basic, x->invariant));
}
