#pragma once

// Class polynomials f_{w,O} by memoized reduction: if some length-preserving
// cyclic shift w' of w has a simple s with ℓ(s w' s) = ℓ(w') − 2, then
// f(w) = (v − v^{-1}) f(s w') + f(s w' s); otherwise f(w) = {class(w) : 1}.

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/conjugacy.hpp"
#include "alcove/laurent.hpp"

namespace alcove {

inline constexpr const char* kEngineVersion = "1";

/// Which descent the reduction takes when several are available.
struct PivotRule {
  enum class Kind { Canonical, Reversed, Seeded };
  Kind kind = Kind::Canonical;
  std::uint64_t seed = 0;

  /// "canonical", "reversed" or "seeded:N".
  static PivotRule parse(const std::string& text);
  std::string str() const;
};

struct EngineLimits {
  std::size_t max_memo_entries = 20'000'000;
  /// Fresh reduction nodes allowed per top-level class_polynomials call.
  std::size_t max_nodes = 50'000'000;
};

/// Class representative → f_{w,O}. Keys are the least minimal-length element
/// of each class.
using ClassTerms = std::map<AffElt, LaurentPoly>;

struct ClassDecomposition {
  AffElt source;
  std::uint64_t datum_hash = 0;
  ClassTerms terms;
  friend bool operator==(const ClassDecomposition&, const ClassDecomposition&) = default;
};

/// Formal Σ c_x T_x.
using HeckeSum = std::map<AffElt, LaurentPoly>;
enum class Side { Left, Right };

class CocenterEngine {
public:
  explicit CocenterEngine(const ConjugacyClasses& classes, PivotRule pivot = {}, EngineLimits limits = {});
  CocenterEngine(const CocenterEngine&) = delete;
  CocenterEngine& operator=(const CocenterEngine&) = delete;

  const ConjugacyClasses& classes() const { return classes_; }
  const AffineWeylGroup& affine() const { return classes_.affine(); }
  const PivotRule& pivot() const { return pivot_; }

  /// T_s · T_w (Side::Left) or T_w · T_s (Side::Right) in the T-basis.
  HeckeSum generator_product(std::size_t s, const AffElt& w, Side side) const;

  ClassDecomposition class_polynomials(const AffElt& w) const;

  /// Least element of the length-preserving cyclic-shift orbit of w.
  AffElt fingerprint(const AffElt& w) const;

  // -- memo access for persistence ---------------------------------------------
  std::size_t memo_size() const;
  /// Every memoized (fingerprint, terms) pair, sorted by fingerprint.
  std::vector<std::pair<AffElt, ClassTerms>> memo_entries() const;
  /// Inserts a precomputed result for the orbit of `element`. Re-inserting an
  /// equal value is a no-op; a different value raises IntegrityError.
  void insert_memo(const AffElt& element, ClassTerms terms) const;

private:
  using TermsPtr = std::shared_ptr<const ClassTerms>;

  const ConjugacyClasses& classes_;
  PivotRule pivot_;
  EngineLimits limits_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<AffElt, TermsPtr, AffEltHash> memo_;         // fingerprint → terms
  mutable std::unordered_map<AffElt, AffElt, AffEltHash> fingerprint_of_;  // element → fingerprint

  TermsPtr compute(const AffElt& w, std::size_t& nodes) const;
  TermsPtr lookup(const AffElt& fp) const;
  TermsPtr store(const AffElt& fp, ClassTerms terms) const;
  std::vector<AffElt> pivot_order(std::vector<AffElt> orbit, const AffElt& fp) const;
  std::vector<std::size_t> simple_order(const AffElt& fp) const;
  AffElt register_orbit(const AffElt& w) const;
};

/// Checks on a decomposition: positivity in N[v − v^{-1}] and
/// deg f_{w,O} <= ℓ(w) − ℓ(O).
struct DecompositionCheck {
  bool nonnegative = true;
  bool degree_bound = true;
  bool unit_at_one = true;
};
DecompositionCheck check_decomposition(const CocenterEngine& engine, const ClassDecomposition& d);

}  // namespace alcove
