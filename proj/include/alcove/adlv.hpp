#pragma once

// Nonemptiness and dimension of X_w(b): the dimension = degree evaluator
// over class polynomials, and the closed-form routes (minimal length,
// P-alcoves, shrunken chamber, w0 t^mu, split b, the basic-b comparison scan).

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "alcove/hecke_cocenter.hpp"

namespace alcove {

/// nullopt stands for −∞ (empty variety).
using Dim = std::optional<Rational>;
std::string dim_str(const Dim& d);

struct SigmaClass {
  ClassInvariant invariant;
  ClassPtr straight_class;
  bool basic = false;
  std::size_t defect = 0;
};

/// P = MN with M = v · M_J · v^{-1} and R_N = v(R^+ \ R_J^+).
struct ParabolicDatum {
  std::vector<std::size_t> levi_roots;  // root indices, sorted
  std::vector<std::size_t> n_roots;     // root indices, sorted
  std::uint64_t levi_simple_mask = 0;   // J
  WeylElt witness;                      // v
};

struct AdlvTerm {
  AffElt rep;
  std::size_t len_O = 0;
  LaurentPoly f;
  /// ½(ℓ(w) + ℓ(O) + deg f) − <ν_b, 2ρ>
  Rational value;
};

struct MethodResult {
  bool nonempty = false;
  Dim dim;
  /// Agreement with the class-polynomial verdict.
  bool agrees = false;
  std::string detail;
};

struct ADLVReport {
  AffElt w;
  ClassInvariant b;
  bool nonempty = false;
  Dim dim;
  std::vector<AdlvTerm> terms;
  std::optional<MethodResult> min_length;
  std::optional<MethodResult> shrunken;
  std::optional<MethodResult> p_alcove;
  std::optional<MethodResult> longest_coset;
  /// Conjunction of the agreement flags of the methods that applied.
  std::optional<bool> agreement;
};

struct SplitBVariant {
  std::string assembly;  // "x t y" or "y t x"
  std::string chamber;   // "t y" or "t x": element whose alcove must be dominant
  AffElt w;
  bool chamber_ok = false;
  Dim formula;
  Dim oracle;
  bool agrees = false;
};

struct SplitBRecord {
  WeylElt x, y;
  IntVec mu, lambda;
  std::vector<SplitBVariant> variants;
  /// Least k <= regularity_threshold such that the "x t y"/"t y" variant
  /// agrees for k·λ, k'·λ for all k <= k' <= regularity_threshold.
  std::optional<Int> agreeing_from;
};

struct GhkrRow {
  AffElt w;
  std::size_t length = 0;
  Dim dim_b;
  Dim dim_basic;
  Dim predicted;
  bool agrees = false;
};

struct GhkrTable {
  ClassInvariant b, b_basic;
  Rational offset;  // −<ν_b, ρ> + ½(def(b') − def(b))
  std::vector<GhkrRow> rows;
  std::size_t disagreements = 0;
  /// Least L with agreement on every row of length >= L.
  std::size_t agreeing_from = 0;
};

class AdlvEngine {
public:
  explicit AdlvEngine(const CocenterEngine& cocenter);

  const CocenterEngine& cocenter() const { return cocenter_; }
  const ConjugacyClasses& classes() const { return cocenter_.classes(); }
  const AffineWeylGroup& affine() const { return cocenter_.affine(); }
  const RootDatum& datum() const { return cocenter_.affine().datum(); }

  // -- σ-conjugacy classes ----------------------------------------------------
  SigmaClass sigma_class_from_invariant(const ClassInvariant& inv) const;
  SigmaClass sigma_class_of(const AffElt& w) const;
  /// The basic class with the given Kottwitz coordinates.
  SigmaClass basic_class(const PiOneElt& kappa) const;
  /// Invariant order.
  bool bg_leq(const SigmaClass& b, const SigmaClass& b2) const;
  /// Bruhat order on straight representatives.
  bool bg_leq_bruhat(const SigmaClass& b, const SigmaClass& b2) const;
  std::size_t defect(const SigmaClass& b) const { return b.defect; }

  // -- dimension = degree -------------------------------------------------------
  ADLVReport dim_adlv(const AffElt& w, const SigmaClass& b) const;
  ADLVReport dim_min_length(const AffElt& w, const SigmaClass& b) const;
  /// dim_adlv plus every closed-form route that applies to (w, b).
  ADLVReport full_report(const AffElt& w, const SigmaClass& b) const;

  // -- P-alcoves ----------------------------------------------------------------
  const std::vector<ParabolicDatum>& semistandard_parabolics() const;
  bool in_levi_weyl(WeylElt u, const ParabolicDatum& p) const;
  bool is_p_alcove(const AffElt& w, const ParabolicDatum& p) const;
  /// G-invariant of the basic M-class with κ_M = κ_M(w).
  ClassInvariant induced_basic_invariant(const AffElt& w, const ParabolicDatum& p) const;
  bool basic_nonempty_via_alcoves(const AffElt& w, const SigmaClass& b) const;

  // -- shrunken chamber -----------------------------------------------------------
  bool shrunken_nonempty(const AffElt& w, const SigmaClass& b) const;
  Dim shrunken_dim(const AffElt& w, const SigmaClass& b) const;

  // -- w0 t^mu, split b, basic comparison -----------------------------------------
  ADLVReport longest_coset_case(const IntVec& mu, const SigmaClass& b) const;
  SplitBRecord split_b_checker(WeylElt x, WeylElt y, const IntVec& mu, const IntVec& lambda,
                               Int regularity_threshold) const;
  GhkrTable ghkr_scan(const SigmaClass& b, const SigmaClass& b_basic, std::size_t max_len) const;

private:
  const CocenterEngine& cocenter_;
  mutable std::once_flag parabolics_once_;
  mutable std::vector<ParabolicDatum> parabolics_;

  mutable std::mutex sigma_mutex_;
  mutable std::map<ClassInvariant, SigmaClass> sigma_cache_;

  std::size_t compute_defect(const ConjClass& straight) const;
  std::vector<bool> roots_in_span(std::uint64_t mask) const;
  Dim split_b_formula(WeylElt x, WeylElt y, const IntVec& lambda) const;
};

}  // namespace alcove
