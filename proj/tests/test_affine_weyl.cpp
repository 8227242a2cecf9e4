#include <doctest.h>

#include <map>
#include <set>

#include "alcove/affine_weyl.hpp"

using namespace alcove;

namespace {

// Breadth-first ball around 1 in the Coxeter part: distance = length.
std::map<AffElt, std::size_t> gallery_ball(const AffineWeylGroup& a, std::size_t radius) {
  std::map<AffElt, std::size_t> dist{{a.identity(), 0}};
  std::vector<AffElt> frontier{a.identity()};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<AffElt> next;
    for (const auto& w : frontier)
      for (std::size_t s = 0; s < a.num_simple(); ++s) {
        AffElt x = a.right_mul_simple(w, s);
        if (dist.emplace(x, r).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return dist;
}

// Coefficients of prod_i (1 - q^{d_i}) / ((1 - q)(1 - q^{d_i - 1})) up to q^n:
// the length generating function of an irreducible affine Weyl group with
// degrees d_i.
std::vector<long> bott_series(const std::vector<int>& degrees, std::size_t n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  auto times_one_minus = [&](int k) {
    for (std::size_t i = n; i + 1 > 0 && i >= static_cast<std::size_t>(k); --i) p[i] -= p[i - k];
  };
  auto divide_one_minus = [&](int k) {
    for (std::size_t i = static_cast<std::size_t>(k); i <= n; ++i) p[i] += p[i - k];
  };
  for (int d : degrees) {
    times_one_minus(d);
    divide_one_minus(1);
    divide_one_minus(d - 1);
  }
  return p;
}

// All products of subwords of a reduced word of b, times its Omega part.
std::set<AffElt> subword_products(const AffineWeylGroup& a, const AffElt& b) {
  AffElt omega;
  auto word = a.reduced_word(b, &omega);
  std::set<AffElt> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    AffElt x = a.identity();
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask >> i & 1) x = a.right_mul_simple(x, word[i]);
    out.insert(a.mul(x, omega));
  }
  return out;
}

}  // namespace

TEST_CASE("length matches gallery distance") {
  for (std::string name : {"SL2", "SL3", "C2", "G2", "PGL3"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    auto ball = gallery_ball(a, 6);
    for (const auto& [w, r] : ball) {
      CHECK(a.length(w) == r);
      CHECK(a.in_affine_weyl(w));
      // Omega preserves length from either side.
      for (const auto& kappa : a.kappa_window(0)) {
        AffElt tau = a.omega_element(kappa);
        CHECK(a.length(tau) == 0);
        CHECK(a.length(a.mul(w, tau)) == r);
        CHECK(a.length(a.mul(tau, w)) == r);
      }
    }
  }
}

TEST_CASE("layer sizes follow the length generating function") {
  struct Row {
    const char* name;
    std::vector<int> degrees;
  };
  const Row rows[] = {{"SL2", {2}}, {"SL3", {2, 3}}, {"C2", {2, 4}}, {"G2", {2, 6}}, {"SL4", {2, 3, 4}}};
  for (const auto& r : rows) {
    CAPTURE(std::string(r.name));
    RootDatum d = RootDatum::preset(r.name);
    AffineWeylGroup a(d);
    const std::size_t n = 7;
    auto series = bott_series(r.degrees, n);
    for (std::size_t len = 0; len <= n; ++len) {
      CAPTURE(len);
      CHECK(static_cast<long>(a.elements_of_length(a.kottwitz(a.identity()), len)->size()) == series[len]);
    }
  }
}

TEST_CASE("group law") {
  RootDatum d = RootDatum::preset("PGL3");
  AffineWeylGroup a(d);
  std::vector<AffElt> sample;
  for (std::size_t len = 0; len <= 3; ++len)
    for (const auto& kappa : a.kappa_window(0))
      for (const auto& w : *a.elements_of_length(kappa, len)) sample.push_back(w);
  for (std::size_t i = 0; i < sample.size(); i += 3)
    for (std::size_t j = 0; j < sample.size(); j += 5) {
      const AffElt& x = sample[i];
      const AffElt& y = sample[j];
      CHECK(a.mul(x, a.inv(x)) == a.identity());
      CHECK(a.mul(a.mul(x, y), sample[(i + j) % sample.size()]) == a.mul(x, a.mul(y, sample[(i + j) % sample.size()])));
      CHECK(a.kottwitz(a.mul(x, y)) == d.pi1_add(a.kottwitz(x), a.kottwitz(y)));
      CHECK(a.length(a.mul(x, y)) <= a.length(x) + a.length(y));
    }
}

TEST_CASE("simple conjugation changes length by -2, 0 or 2") {
  for (std::string name : {"SL3", "C2", "PGL2"}) {
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    for (std::size_t len = 0; len <= 5; ++len)
      for (const auto& kappa : a.kappa_window(0))
        for (const auto& w : *a.elements_of_length(kappa, len))
          for (std::size_t s = 0; s < a.num_simple(); ++s) {
            long delta = static_cast<long>(a.length(a.conj_by_simple(s, w))) - static_cast<long>(len);
            CHECK((delta == -2 || delta == 0 || delta == 2));
          }
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (std::string name : {"SL3", "C2", "PGL2"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    std::vector<AffElt> elts;
    for (std::size_t len = 0; len <= 4; ++len)
      for (const auto& kappa : a.kappa_window(0))
        for (const auto& w : *a.elements_of_length(kappa, len)) elts.push_back(w);
    for (const auto& b : elts) {
      auto below = subword_products(a, b);
      for (const auto& x : elts) CHECK(a.bruhat_leq(x, b) == (below.count(x) > 0));
    }
  }
}

TEST_CASE("encoding round trip and generator words") {
  RootDatum d = RootDatum::preset("PGL2");
  AffineWeylGroup a(d);
  AffElt w = a.parse_key("s0 s1 s0");
  CHECK(a.encode(w) == "t[4].u[1]");
  CHECK(a.length(w) == 3);
  CHECK(a.decode("t[4].u[1]") == w);
  CHECK(a.parse_key("t[4].u[1]") == w);
  CHECK(a.parse_key("t[0].u[]") == a.identity());
  CHECK_THROWS_AS(a.parse_key(""), InputError);
  CHECK_THROWS_AS(a.parse_key("s2"), InputError);
  CHECK_THROWS_AS(a.decode("t[1,2].u[]"), InputError);

  RootDatum g = RootDatum::preset("G2");
  AffineWeylGroup ag(g);
  for (std::size_t len = 0; len <= 6; ++len)
    for (const auto& w2 : *ag.elements_of_length(IntVec{}, len)) CHECK(ag.decode(ag.encode(w2)) == w2);
}

TEST_CASE("dominant decomposition reassembles and gives eta = y x") {
  for (std::string name : {"SL3", "C2", "PGL3"}) {
    RootDatum d = RootDatum::preset(name);
    AffineWeylGroup a(d);
    for (std::size_t len = 0; len <= 5; ++len)
      for (const auto& kappa : a.kappa_window(0))
        for (const auto& w : *a.elements_of_length(kappa, len)) {
          auto dd = a.dominant_decomposition(w);
          CHECK(a.assemble(dd) == w);
          CHECK(a.eta(w) == d.mul(dd.y, dd.x));
          // t^mu y A0 lies in the dominant chamber.
          AffElt ty = a.mul(a.translation(dd.mu), a.finite(dd.y));
          CHECK(a.chamber_of(ty) == d.identity());
        }
  }
}

TEST_CASE("shrunken test on A1") {
  RootDatum d = RootDatum::preset("SL2");
  AffineWeylGroup a(d);
  // Alcoves adjacent to the wall alpha = 0 are not shrunken; farther ones are.
  CHECK_FALSE(a.is_shrunken(a.identity()));
  CHECK_FALSE(a.is_shrunken(a.parse_key("s1")));
  CHECK(a.is_shrunken(a.parse_key("s0")));
  CHECK(a.is_shrunken(a.parse_key("s1 s0")));
}
