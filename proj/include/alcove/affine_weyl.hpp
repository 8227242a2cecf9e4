#pragma once

// The extended affine Weyl group X ⋊ W: products, Iwahori–Matsumoto length,
// simple affine reflections, Kottwitz map, Bruhat order, alcove geometry.
//
// Conventions: t^λ u acts on V by x ↦ λ + u(x). The base alcove A0 is
// {x : 0 < <x, α> < 1 for all positive roots α}, in the dominant chamber.

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "alcove/root_datum.hpp"

namespace alcove {

/// t^translation · finite. Equality and order are component-wise; the order
/// (translation lexicographic, then the canonical order of W) is the total
/// order behind canonical representatives.
struct AffElt {
  IntVec translation;
  WeylElt finite;

  friend bool operator==(const AffElt&, const AffElt&) = default;
  friend std::strong_ordering operator<=>(const AffElt& a, const AffElt& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct AffEltHash {
  std::size_t operator()(const AffElt& w) const noexcept {
    return VecHash{}(w.translation) * 1000003u ^ w.finite.index;
  }
};

/// Canonical coordinates of an element of X/Q.
using PiOneElt = IntVec;

/// w = x · t^mu · y with t^mu y A0 in the dominant chamber.
struct DominantDecomposition {
  WeylElt x;
  IntVec mu;
  WeylElt y;
};

class AffineWeylGroup {
public:
  explicit AffineWeylGroup(const RootDatum& datum);
  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  const RootDatum& datum() const { return datum_; }

  AffElt identity() const { return {IntVec(datum_.rank(), 0), datum_.identity()}; }
  AffElt translation(IntVec lambda) const;
  AffElt finite(WeylElt u) const { return {IntVec(datum_.rank(), 0), u}; }

  AffElt mul(const AffElt& a, const AffElt& b) const;
  AffElt inv(const AffElt& a) const;
  /// x · w · x^{-1}
  AffElt conj(const AffElt& x, const AffElt& w) const { return mul(mul(x, w), inv(x)); }
  AffElt power(const AffElt& w, std::size_t n) const;

  std::size_t length(const AffElt& w) const;

  // -- simple reflections ------------------------------------------------
  /// Affine simple reflections come first (one per Dynkin component), then
  /// the finite simple reflections s1..sl.
  std::size_t num_simple() const { return simples_.size(); }
  const std::vector<AffElt>& simple_reflections() const { return simples_; }
  const AffElt& simple(std::size_t s) const { return simples_[s]; }
  const std::string& simple_name(std::size_t s) const { return simple_names_[s]; }
  std::size_t num_affine_simple() const { return datum_.components().size(); }
  /// Index of the finite simple reflection s_{i+1} in simple_reflections().
  std::size_t finite_simple_index(std::size_t i) const { return num_affine_simple() + i; }
  AffElt left_mul_simple(std::size_t s, const AffElt& w) const { return mul(simples_[s], w); }
  AffElt right_mul_simple(const AffElt& w, std::size_t s) const { return mul(w, simples_[s]); }
  AffElt conj_by_simple(std::size_t s, const AffElt& w) const {
    return mul(mul(simples_[s], w), simples_[s]);
  }

  // -- Kottwitz map and Ω ------------------------------------------------
  PiOneElt kottwitz(const AffElt& w) const { return datum_.kottwitz(w.translation); }
  bool in_affine_weyl(const AffElt& w) const;
  /// The unique length-zero element with the given Kottwitz coordinates.
  AffElt omega_element(const PiOneElt& kappa) const;
  /// All X/Q coordinates; free coordinates range over [-window, window].
  std::vector<PiOneElt> kappa_window(Int window) const;

  /// w = s_{i1} ... s_{ik} · τ with τ ∈ Ω, choosing the least left descent at
  /// each step. Returns the simple indices; `omega` receives τ.
  std::vector<std::size_t> reduced_word(const AffElt& w, AffElt* omega = nullptr) const;

  // -- Bruhat order --------------------------------------------------------
  bool bruhat_leq(const AffElt& a, const AffElt& b) const;

  // -- alcoves ---------------------------------------------------------------
  RatVec barycenter(const AffElt& w) const;
  WeylElt chamber_of(const AffElt& w) const;
  bool is_shrunken(const AffElt& w) const;
  WeylElt eta1(const AffElt& w) const { return w.finite; }
  WeylElt eta2(const AffElt& w) const { return chamber_of(w); }
  WeylElt eta(const AffElt& w) const;
  DominantDecomposition dominant_decomposition(const AffElt& w) const;
  AffElt assemble(const DominantDecomposition& d) const;

  // -- encodings ------------------------------------------------------------
  /// Canonical encoding t[c1,...,cr].u[i1,...,ik] (1-based reduced word of u).
  std::string encode(const AffElt& w) const;
  /// Parses the canonical encoding.
  AffElt decode(const std::string& text) const;
  /// Parses a whitespace-separated product of generators: s0, s1, ..., w0,
  /// translation literals t[...], and canonical encodings.
  AffElt parse_key(const std::string& text) const;

  // -- enumeration -----------------------------------------------------------
  /// All elements of length exactly `len` with Kottwitz value kappa, sorted.
  std::shared_ptr<const std::vector<AffElt>> elements_of_length(const PiOneElt& kappa, std::size_t len) const;
  /// Upper bound on the number of elements kept in the length-layer cache.
  void set_layer_limit(std::size_t limit) { layer_limit_ = limit; }

private:
  const RootDatum& datum_;
  std::vector<AffElt> simples_;
  std::vector<std::string> simple_names_;
  std::vector<std::vector<bool>> inv_positive_;  // [u][k]: u^{-1}(alpha_k) > 0

  mutable std::mutex layer_mutex_;
  mutable std::map<PiOneElt, std::vector<std::shared_ptr<const std::vector<AffElt>>>> layers_;
  mutable std::size_t layer_total_ = 0;
  std::size_t layer_limit_ = 5'000'000;

  struct PairHash {
    std::size_t operator()(const std::pair<AffElt, AffElt>& p) const noexcept {
      return AffEltHash{}(p.first) * 31u ^ AffEltHash{}(p.second);
    }
  };
  mutable std::shared_mutex bruhat_mutex_;
  mutable std::unordered_map<std::pair<AffElt, AffElt>, bool, PairHash> bruhat_memo_;
};

}  // namespace alcove
