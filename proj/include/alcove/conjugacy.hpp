#pragma once

// Conjugacy classes of the extended affine Weyl group: Newton map, the class
// invariant f = (κ, ν), straightness, reduction to minimal length, exact
// conjugacy testing, class enumeration and the two orders on straight classes.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/affine_weyl.hpp"

namespace alcove {

/// f(w) = (κ(w), ν_w) with ν_w dominant.
struct ClassInvariant {
  PiOneElt kappa;
  RatVec newton;
  friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
  friend auto operator<=>(const ClassInvariant& a, const ClassInvariant& b) {
    if (auto c = a.kappa <=> b.kappa; c != 0) return c;
    return a.newton <=> b.newton;
  }
};

/// A conjugacy class, identified by its least minimal-length element.
struct ConjClass {
  AffElt rep;
  std::size_t min_length = 0;
  ClassInvariant invariant;
  bool straight = false;
  /// Every minimal-length element of the class, sorted.
  std::vector<AffElt> minimal_elements;
};

using ClassPtr = std::shared_ptr<const ConjClass>;

struct ConjugationStep {
  AffElt element;      // element before the step
  std::size_t simple;  // index into simple_reflections()
  int length_delta;    // 0 or -2
};

struct Minimization {
  AffElt min_elt;
  std::vector<ConjugationStep> chain;
};

class ConjugacyClasses {
public:
  explicit ConjugacyClasses(const AffineWeylGroup& affine);
  ConjugacyClasses(const ConjugacyClasses&) = delete;
  ConjugacyClasses& operator=(const ConjugacyClasses&) = delete;

  const AffineWeylGroup& affine() const { return affine_; }
  const RootDatum& datum() const { return affine_.datum(); }

  RatVec newton(const AffElt& w) const;
  ClassInvariant class_invariant(const AffElt& w) const { return {affine_.kottwitz(w), newton(w)}; }
  bool is_straight(const AffElt& w) const;

  /// Orbit of w under conjugations s·w·s with ℓ(sws) = ℓ(w), sorted.
  std::vector<AffElt> cyclic_orbit(const AffElt& w) const;
  Minimization minimize(const AffElt& w) const;
  bool is_minimal(const AffElt& w) const;

  bool are_conjugate(const AffElt& a, const AffElt& b) const;

  /// Class of an arbitrary element (minimizes first).
  ClassPtr class_of(const AffElt& w) const;
  /// Class of an element already known to be of minimal length.
  ClassPtr class_of_minimal(const AffElt& m) const;
  /// Looks up a class by representative; nullptr when not yet registered.
  ClassPtr find_class(const AffElt& rep) const;

  /// Classes with ℓ(O) <= max_len, sorted by (ℓ(O), rep). When X/Q has a
  /// free part, free Kottwitz coordinates range over [-kappa_window, kappa_window].
  std::vector<ClassPtr> enumerate_classes(std::size_t max_len, Int kappa_window = 0) const;
  /// Straight classes with <ν, 2ρ> <= max_pairing.
  std::vector<ClassPtr> straight_classes(std::size_t max_pairing, Int kappa_window = 0) const;

  /// Some minimal w in O and w' in O' with w <= w' in the Bruhat order.
  bool straight_class_leq(const ConjClass& lower, const ConjClass& upper) const;
  /// κ equal and ν' − ν a nonnegative rational combination of simple coroots.
  bool invariant_leq(const ClassInvariant& lower, const ClassInvariant& upper) const;

  /// "<datum hash>:<canonical encoding of rep>".
  std::string class_id(const ConjClass& c) const;
  std::string class_id(const AffElt& rep) const;

private:
  const AffineWeylGroup& affine_;

  mutable std::mutex lattice_mutex_;
  mutable std::unordered_map<std::uint32_t, std::shared_ptr<const ImageLattice>> fixed_lattices_;

  mutable std::recursive_mutex registry_mutex_;
  mutable std::unordered_map<AffElt, ClassPtr, AffEltHash> class_of_element_;
  mutable std::map<AffElt, ClassPtr> classes_;

  std::shared_ptr<const ImageLattice> image_of_one_minus(WeylElt u) const;
};

}  // namespace alcove
