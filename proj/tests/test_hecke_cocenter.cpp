#include <doctest.h>

#include "alcove/hecke_cocenter.hpp"

using namespace alcove;

namespace {

std::vector<AffElt> ball(const AffineWeylGroup& a, std::size_t max_len) {
  std::vector<AffElt> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const auto& kappa : a.kappa_window(0))
      for (const auto& w : *a.elements_of_length(kappa, len)) out.push_back(w);
  return out;
}

struct Fixture {
  explicit Fixture(const std::string& name, PivotRule pivot = {}, EngineLimits limits = {})
      : datum(RootDatum::preset(name)), affine(datum), classes(affine), engine(classes, pivot, limits) {}
  RootDatum datum;
  AffineWeylGroup affine;
  ConjugacyClasses classes;
  CocenterEngine engine;
};

}  // namespace

TEST_CASE("pivot rule parsing") {
  CHECK(PivotRule::parse("canonical").kind == PivotRule::Kind::Canonical);
  CHECK(PivotRule::parse("reversed").kind == PivotRule::Kind::Reversed);
  PivotRule r = PivotRule::parse("seeded:42");
  CHECK(r.kind == PivotRule::Kind::Seeded);
  CHECK(r.seed == 42);
  CHECK(r.str() == "seeded:42");
  CHECK_THROWS_AS(PivotRule::parse("seeded:x"), InputError);
  CHECK_THROWS_AS(PivotRule::parse("random"), InputError);
}

TEST_CASE("quadratic relation T_s^2 = z T_s + 1") {
  Fixture f("C2");
  for (std::size_t s = 0; s < f.affine.num_simple(); ++s) {
    HeckeSum ts = f.engine.generator_product(s, f.affine.identity(), Side::Left);
    REQUIRE(ts.size() == 1);
    HeckeSum sq;
    for (const auto& [x, c] : ts)
      for (const auto& [y, c2] : f.engine.generator_product(s, x, Side::Left)) sq[y] += c * c2;
    CHECK(sq.size() == 2);
    CHECK(sq[f.affine.identity()] == LaurentPoly::constant(1));
    CHECK(sq[f.affine.simple(s)] == LaurentPoly::z());
  }
}

TEST_CASE("left and right generator products commute") {
  Fixture f("SL3");
  for (const auto& w : ball(f.affine, 4))
    for (std::size_t s = 0; s < f.affine.num_simple(); ++s)
      for (std::size_t t = 0; t < f.affine.num_simple(); ++t) {
        HeckeSum lr, rl;
        for (const auto& [x, c] : f.engine.generator_product(s, w, Side::Left))
          for (const auto& [y, c2] : f.engine.generator_product(t, x, Side::Right)) lr[y] += c * c2;
        for (const auto& [x, c] : f.engine.generator_product(t, w, Side::Right))
          for (const auto& [y, c2] : f.engine.generator_product(s, x, Side::Left)) rl[y] += c * c2;
        std::erase_if(lr, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(rl, [](const auto& kv) { return kv.second.is_zero(); });
        CHECK(lr == rl);
      }
}

TEST_CASE("A1 decompositions") {
  Fixture f("SL2");
  const auto& a = f.affine;
  auto rep = [&](const char* key) { return f.classes.class_of(a.parse_key(key))->rep; };

  auto d = f.engine.class_polynomials(a.parse_key("s1 s0 s1"));
  CHECK(d.terms.size() == 2);
  CHECK(d.terms[rep("s0 s1")] == LaurentPoly::z());
  CHECK(d.terms[rep("s0")] == LaurentPoly::constant(1));

  auto m = f.engine.class_polynomials(a.parse_key("s0 s1 s0 s1"));
  CHECK(m.terms.size() == 1);
  CHECK(m.terms.begin()->second == LaurentPoly::constant(1));
}

TEST_CASE("specialization at v = 1 recovers the class of w") {
  for (std::string name : {"SL3", "PGL3", "C2"}) {
    CAPTURE(name);
    Fixture f(name);
    for (const auto& w : ball(f.affine, 6)) {
      auto d = f.engine.class_polynomials(w);
      const AffElt own = f.classes.class_of(w)->rep;
      for (const auto& [rep, poly] : d.terms) CHECK(poly.eval_at_one() == (rep == own ? 1 : 0));
      auto chk = check_decomposition(f.engine, d);
      CHECK(chk.nonnegative);
      CHECK(chk.degree_bound);
      CHECK(chk.unit_at_one);
      if (f.classes.is_minimal(w)) {
        CHECK(d.terms.size() == 1);
        CHECK(d.terms.begin()->first == own);
      }
    }
  }
}

TEST_CASE("pivot independence") {
  Fixture canonical("C2");
  Fixture reversed("C2", PivotRule::parse("reversed"));
  Fixture seeded("C2", PivotRule::parse("seeded:7"));
  for (const auto& w : ball(canonical.affine, 7)) {
    auto a = canonical.engine.class_polynomials(w).terms;
    CHECK(a == reversed.engine.class_polynomials(w).terms);
    CHECK(a == seeded.engine.class_polynomials(w).terms);
  }
}

TEST_CASE("cyclic shifts share one result") {
  Fixture f("SL3");
  for (const auto& w : ball(f.affine, 5)) {
    auto base = f.engine.class_polynomials(w).terms;
    for (const auto& x : f.classes.cyclic_orbit(w)) {
      CHECK(f.engine.fingerprint(x) == f.engine.fingerprint(w));
      CHECK(f.engine.class_polynomials(x).terms == base);
    }
  }
}

TEST_CASE("memo insertion and limits") {
  Fixture f("SL2");
  AffElt w = f.affine.parse_key("s1 s0 s1");
  auto d = f.engine.class_polynomials(w);
  CHECK_NOTHROW(f.engine.insert_memo(w, d.terms));
  ClassTerms wrong = d.terms;
  wrong.begin()->second += LaurentPoly::constant(1);
  CHECK_THROWS_AS(f.engine.insert_memo(w, wrong), IntegrityError);

  Fixture fresh("SL2");
  fresh.engine.insert_memo(w, d.terms);
  CHECK(fresh.engine.class_polynomials(w).terms == d.terms);
  CHECK(fresh.engine.memo_size() == 1);

  Fixture tight("SL3", {}, EngineLimits{1000, 2});
  CHECK_THROWS_AS(tight.engine.class_polynomials(tight.affine.parse_key("s0 s1 s2 s0 s1 s2 s0 s1")), ResourceLimitError);
}
