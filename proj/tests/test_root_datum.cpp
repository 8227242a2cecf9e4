#include <doctest.h>

#include <set>

#include "alcove/root_datum.hpp"

using namespace alcove;

namespace {

// Number of positive roots sent to negative roots by w.
std::size_t inversions(const RootDatum& d, WeylElt w) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < d.num_positive(); ++k)
    if (!d.is_positive(d.act_on_root(w, k))) ++n;
  return n;
}

}  // namespace

TEST_CASE("Weyl group orders and root counts") {
  struct Row {
    const char* name;
    std::size_t order, roots, rank;
  };
  const Row rows[] = {{"SL2", 2, 2, 1},  {"PGL2", 2, 2, 1},  {"SL3", 6, 6, 2}, {"PGL3", 6, 6, 2}, {"GL3", 6, 6, 3},
                      {"SL4", 24, 12, 3}, {"B2", 8, 8, 2},    {"C2", 8, 8, 2},  {"G2", 12, 12, 2}, {"B3", 48, 18, 3},
                      {"C3", 48, 18, 3},  {"A4", 120, 20, 4}, {"Sp4", 8, 8, 2}};
  for (const auto& r : rows) {
    CAPTURE(std::string(r.name));
    RootDatum d = RootDatum::preset(r.name);
    CHECK(d.weyl_order() == r.order);
    CHECK(d.num_roots() == r.roots);
    CHECK(d.rank() == r.rank);
    CHECK(d.length(d.longest_element()) == d.num_positive());
  }
}

TEST_CASE("length equals inversion count, words are reduced") {
  for (std::string name : {"SL3", "C2", "G2", "B3"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    for (WeylElt w : d.elements()) {
      CHECK(d.length(w) == inversions(d, w));
      const auto& word = d.word(w);
      CHECK(word.size() == d.length(w));
      std::vector<std::size_t> idx(word.begin(), word.end());
      CHECK(d.from_word(idx) == w);
      CHECK(d.mul(w, d.inverse(w)) == d.identity());
    }
  }
}

TEST_CASE("reflections act by x - <x,alpha> alpha^vee") {
  RootDatum d = RootDatum::preset("G2");
  IntVec x = {3, -2};
  for (std::size_t k = 0; k < d.num_roots(); ++k) {
    Int p = 0;
    for (std::size_t i = 0; i < d.rank(); ++i) p += x[i] * d.root(k)[i];
    IntVec expect = x;
    for (std::size_t i = 0; i < d.rank(); ++i) expect[i] -= p * d.coroot(k)[i];
    CHECK(d.act(d.reflection(k), x) == expect);
  }
}

TEST_CASE("dominant representative is W-invariant and dominant") {
  for (std::string name : {"SL3", "C2", "G2"}) {
    RootDatum d = RootDatum::preset(name);
    RatVec x = {Rational(5, 3), Rational(-7, 2)};
    auto [dom, u] = d.dominant_rep(x);
    CHECK(d.is_dominant(dom));
    CHECK(d.act(u, x) == dom);
    for (WeylElt w : d.elements()) CHECK(d.dominant_rep(d.act(w, x)).first == dom);
  }
}

TEST_CASE("fundamental group") {
  CHECK(RootDatum::preset("SL3").pi1_moduli().empty());
  CHECK(RootDatum::preset("PGL3").pi1_moduli() == std::vector<Int>{3});
  CHECK(RootDatum::preset("GL3").pi1_has_free_part());
  CHECK_FALSE(RootDatum::preset("PGL3").pi1_has_free_part());

  RootDatum d = RootDatum::preset("PGL4");
  // Coroots vanish in X/Q; kappa is additive.
  for (std::size_t k = 0; k < d.num_roots(); ++k) CHECK(d.kottwitz(d.coroot(k)) == IntVec{0});
  std::set<IntVec> values;
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b)
      for (Int c = -2; c <= 2; ++c) {
        IntVec x = {a, b, c}, y = {b, c, a};
        IntVec sum = {a + b, b + c, c + a};
        CHECK(d.kottwitz(sum) == d.pi1_add(d.kottwitz(x), d.kottwitz(y)));
        values.insert(d.kottwitz(x));
      }
  CHECK(values.size() == 4);
}

TEST_CASE("fixed space dimension") {
  RootDatum d = RootDatum::preset("GL4");
  CHECK(d.fixed_space_dim(d.identity()) == 4);
  for (WeylElt w : d.elements()) {
    // On Z^n a permutation matrix fixes a space of dimension = number of cycles.
    const IntMatrix& m = d.matrix(w);
    std::vector<bool> seen(4, false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j];) {
        seen[j] = true;
        std::size_t next = 0;
        while (m(next, j) == 0) ++next;
        j = next;
      }
    }
    CHECK(d.fixed_space_dim(w) == cycles);
  }
  CHECK(d.fixed_space_dim(d.simple_reflection(0)) == 3);
  CHECK(RootDatum::preset("PGL2").fixed_space_dim(RootDatum::preset("PGL2").longest_element()) == 0);
}

TEST_CASE("explicit datum validation") {
  ExplicitDatum bad;
  bad.rank = 1;
  bad.roots = {{1}, {-1}};
  bad.coroots = {{1}, {-1}};  // <alpha, alpha^vee> = 1
  bad.simple = {0};
  CHECK_THROWS_AS(RootDatum::from_explicit(bad), InputError);

  ExplicitDatum good = bad;
  good.coroots = {{2}, {-2}};
  RootDatum d = RootDatum::from_explicit(good);
  CHECK(d.weyl_order() == 2);
  CHECK(d.hash() == RootDatum::from_explicit(good).hash());

  CHECK_THROWS_AS(RootDatum::preset("E9"), InputError);
}
