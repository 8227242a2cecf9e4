#pragma once

// Split reductive root data and finite Weyl group arithmetic.
//
// All vectors are written in coordinates of the coweight lattice X: a
// coweight is an integer column vector, a root is an integer covector, and
// the pairing <x, alpha> is the plain dot product. The coroot lattice Q is
// the span of the simple coroots inside X.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alcove/lattice.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// Element of the finite Weyl group W, as an index into the datum's element
/// table. Indices are sorted by (length, lexicographically least reduced
/// word), so index 0 is the identity and the natural order on indices is the
/// canonical order used for encodings.
struct WeylElt {
  std::uint32_t index = 0;
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

/// Raw input for a user-supplied datum, in ambient coordinates.
struct ExplicitDatum {
  std::size_t rank = 0;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  std::vector<std::size_t> simple;
  std::optional<std::vector<IntVec>> lattice_basis;
};

class RootDatum {
public:
  /// Builds and validates a datum from simple roots (covectors on X) and
  /// simple coroots (vectors in X), both in lattice coordinates.
  static RootDatum from_simple(std::string name, std::size_t rank, std::vector<IntVec> simple_roots,
                               std::vector<IntVec> simple_coroots);
  static RootDatum from_explicit(const ExplicitDatum& spec, std::string name = "custom");
  /// SLn, PGLn, GLn, Sp4, SO5, G2, or "<Type><rank>[_sc|_ad]" for types A-G.
  static RootDatum preset(const std::string& name);
  static std::vector<std::string> preset_names();

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_.size(); }

  // -- roots --------------------------------------------------------------
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const IntVec& root(std::size_t k) const { return roots_[k]; }
  const IntVec& coroot(std::size_t k) const { return coroots_[k]; }
  /// Roots are stored positive first; index k < num_positive() is positive.
  bool is_positive(std::size_t k) const { return k < num_positive(); }
  std::size_t negative_of(std::size_t k) const { return (k + num_positive()) % num_roots(); }
  /// Root index of the i-th simple root (equals i).
  std::size_t simple_root(std::size_t i) const { return simple_[i]; }
  /// Coefficients of root k in the basis of simple roots.
  const IntVec& root_coefficients(std::size_t k) const { return coeffs_[k]; }
  std::optional<std::size_t> find_root(const IntVec& covector) const;
  const IntMatrix& cartan() const { return cartan_; }
  /// Connected components of the Dynkin diagram, as sets of simple indices.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  /// Highest root of each component (root index).
  const std::vector<std::size_t>& highest_roots() const { return highest_; }
  bool is_connected() const { return components_.size() == 1; }
  const IntVec& two_rho() const { return two_rho_; }

  // -- Weyl group -----------------------------------------------------------
  std::size_t weyl_order() const { return elements_.size(); }
  WeylElt identity() const { return {0}; }
  WeylElt simple_reflection(std::size_t i) const { return {simple_refl_[i]}; }
  WeylElt longest_element() const { return {longest_}; }
  WeylElt mul(WeylElt a, WeylElt b) const;
  WeylElt inverse(WeylElt a) const { return {elements_[a.index].inverse}; }
  std::size_t length(WeylElt w) const { return elements_[w.index].length; }
  /// Lexicographically least reduced word, 0-based simple indices.
  const std::vector<std::uint8_t>& word(WeylElt w) const { return elements_[w.index].word; }
  WeylElt from_word(std::span<const std::size_t> word) const;
  /// Left multiplication by s_i, via table.
  WeylElt left_mul_simple(std::size_t i, WeylElt w) const { return {lmul_[i][w.index]}; }
  WeylElt right_mul_simple(WeylElt w, std::size_t i) const { return {rmul_[i][w.index]}; }
  /// w(root k) as a root index.
  std::size_t act_on_root(WeylElt w, std::size_t k) const { return elements_[w.index].perm[k]; }
  IntVec act(WeylElt w, const IntVec& x) const { return elements_[w.index].matrix.apply(x); }
  RatVec act(WeylElt w, const RatVec& x) const { return elements_[w.index].matrix.apply(x); }
  const IntMatrix& matrix(WeylElt w) const { return elements_[w.index].matrix; }
  /// The reflection in root k.
  WeylElt reflection(std::size_t k) const { return {reflection_[k]}; }
  /// Bitmask of simple indices occurring in a reduced word.
  std::uint64_t support(WeylElt w) const;
  /// True iff w lies in the standard parabolic subgroup W_J (J a bitmask).
  bool in_standard_parabolic(WeylElt w, std::uint64_t mask) const { return (support(w) & ~mask) == 0; }
  /// Multiplicative order of w.
  std::size_t order(WeylElt w) const;
  /// Index of the conjugacy class of w inside W (classes numbered in order of
  /// first appearance).
  std::size_t conjugacy_class_index(WeylElt w) const { return wclass_[w.index]; }
  std::vector<WeylElt> elements() const;
  std::string word_string(WeylElt w) const;

  // -- rational coweights -------------------------------------------------
  Rational pairing(const RatVec& x, std::size_t k) const { return dot(x, roots_[k]); }
  Rational two_rho_pairing(const RatVec& x) const { return dot(x, two_rho_); }
  bool is_dominant(const RatVec& x) const;
  /// Dominant element of the W-orbit of x and a witness u with u(x) dominant.
  std::pair<RatVec, WeylElt> dominant_rep(const RatVec& x) const;
  /// Fundamental coweights inside the rational span of the coroots.
  const std::vector<RatVec>& fundamental_coweights() const { return fund_coweights_; }
  /// Barycenter of the base alcove 0 < <x, alpha> < 1 (alpha > 0), taken
  /// inside the span of the coroots.
  const RatVec& base_barycenter() const { return base_barycenter_; }
  /// Projection of x onto the W-fixed subspace along the span of the coroots.
  RatVec central_projection(const RatVec& x) const;
  /// dim of the fixed subspace of u acting on V.
  std::size_t fixed_space_dim(WeylElt u) const;

  // -- fundamental group X/Q ---------------------------------------------
  /// Moduli of the canonical coordinates of X/Q; 0 marks a free coordinate.
  const std::vector<Int>& pi1_moduli() const { return pi1_moduli_; }
  IntVec kottwitz(const IntVec& lambda) const;
  /// A lattice vector with the given X/Q coordinates.
  IntVec kottwitz_lift(const IntVec& coords) const;
  IntVec pi1_add(const IntVec& a, const IntVec& b) const;
  bool pi1_has_free_part() const;

  std::uint64_t hash() const { return hash_; }
  std::string hash_hex() const;

private:
  struct ElementData {
    std::vector<std::uint16_t> perm;
    IntMatrix matrix;
    std::vector<std::uint8_t> word;
    std::uint32_t length = 0;
    std::uint32_t inverse = 0;
  };

  RootDatum() = default;
  void generate_roots(const std::vector<IntVec>& simple_roots, const std::vector<IntVec>& simple_coroots);
  void generate_weyl_group();
  void compute_geometry();
  void compute_fundamental_group();
  void compute_hash();
  std::uint32_t lookup(const std::vector<std::uint16_t>& perm) const;

  std::string name_;
  std::size_t rank_ = 0;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<IntVec> coeffs_;
  std::vector<std::size_t> simple_;
  std::unordered_map<IntVec, std::size_t, VecHash> root_index_;
  IntMatrix cartan_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> highest_;
  IntVec two_rho_;

  std::vector<ElementData> elements_;
  std::vector<std::vector<std::uint32_t>> lmul_;
  std::vector<std::vector<std::uint32_t>> rmul_;
  std::vector<std::uint32_t> mul_table_;  // filled only for small groups
  std::unordered_map<IntVec, std::uint32_t, VecHash> perm_index_;
  std::vector<std::uint32_t> simple_refl_;
  std::vector<std::uint32_t> reflection_;
  std::vector<std::uint32_t> wclass_;
  std::uint32_t longest_ = 0;

  std::vector<RatVec> fund_coweights_;
  RatVec base_barycenter_;

  std::vector<IntVec> pi1_rows_;
  std::vector<Int> pi1_moduli_;
  IntMatrix pi1_section_;  // U^{-1}
  std::vector<std::size_t> pi1_row_pos_;

  std::uint64_t hash_ = 0;
};

}  // namespace alcove
