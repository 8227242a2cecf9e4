#include "alcove/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace alcove {

ConjugacyClasses::ConjugacyClasses(const AffineWeylGroup& affine) : affine_(affine) {}

RatVec ConjugacyClasses::newton(const AffElt& w) const {
  // w^n is a translation once n is the order of the finite part.
  std::size_t n = datum().order(w.finite);
  AffElt p = affine_.power(w, n);
  RatVec avg = scale(to_rational(p.translation), Rational(1, static_cast<Int>(n)));
  return datum().dominant_rep(avg).first;
}

bool ConjugacyClasses::is_straight(const AffElt& w) const {
  return Rational(static_cast<Int>(affine_.length(w))) == datum().two_rho_pairing(newton(w));
}

std::vector<AffElt> ConjugacyClasses::cyclic_orbit(const AffElt& w) const {
  const std::size_t len = affine_.length(w);
  std::set<AffElt> seen{w};
  std::deque<AffElt> queue{w};
  while (!queue.empty()) {
    AffElt cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t s = 0; s < affine_.num_simple(); ++s) {
      AffElt c = affine_.conj_by_simple(s, cur);
      if (affine_.length(c) == len && seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

Minimization ConjugacyClasses::minimize(const AffElt& w) const {
  Minimization out{w, {}};
  while (true) {
    const std::size_t len = affine_.length(out.min_elt);
    // Breadth-first over the length level with parent links for the chain.
    struct Node {
      AffElt elt;
      std::size_t parent;
      std::size_t simple;
    };
    std::vector<Node> nodes{{out.min_elt, 0, 0}};
    std::set<AffElt> seen{out.min_elt};
    bool descended = false;
    for (std::size_t cur = 0; cur < nodes.size() && !descended; ++cur) {
      for (std::size_t s = 0; s < affine_.num_simple(); ++s) {
        AffElt c = affine_.conj_by_simple(s, nodes[cur].elt);
        std::size_t lc = affine_.length(c);
        if (lc < len) {
          std::vector<ConjugationStep> path;
          for (std::size_t i = cur; i != 0; i = nodes[i].parent)
            path.push_back({nodes[nodes[i].parent].elt, nodes[i].simple, 0});
          std::reverse(path.begin(), path.end());
          out.chain.insert(out.chain.end(), path.begin(), path.end());
          out.chain.push_back({nodes[cur].elt, s, static_cast<int>(lc) - static_cast<int>(len)});
          out.min_elt = std::move(c);
          descended = true;
          break;
        }
        if (lc == len && seen.insert(c).second) nodes.push_back({std::move(c), cur, s});
      }
    }
    if (!descended) return out;
  }
}

bool ConjugacyClasses::is_minimal(const AffElt& w) const {
  const std::size_t len = affine_.length(w);
  for (const auto& m : cyclic_orbit(w))
    for (std::size_t s = 0; s < affine_.num_simple(); ++s)
      if (affine_.length(affine_.conj_by_simple(s, m)) < len) return false;
  return true;
}

std::shared_ptr<const ImageLattice> ConjugacyClasses::image_of_one_minus(WeylElt u) const {
  std::lock_guard lock(lattice_mutex_);
  auto it = fixed_lattices_.find(u.index);
  if (it != fixed_lattices_.end()) return it->second;
  IntMatrix m = datum().matrix(u);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = (i == j ? 1 : 0) - m(i, j);
  auto lat = std::make_shared<const ImageLattice>(m);
  fixed_lattices_.emplace(u.index, lat);
  return lat;
}

bool ConjugacyClasses::are_conjugate(const AffElt& a, const AffElt& b) const {
  if (a == b) return true;
  const RootDatum& d = datum();
  if (d.conjugacy_class_index(a.finite) != d.conjugacy_class_index(b.finite)) return false;
  if (affine_.kottwitz(a) != affine_.kottwitz(b)) return false;
  // t^mu y · t^λa ua · (t^mu y)^{-1} = t^{y λa + (1 - ub) mu} ub when y ua y^{-1} = ub.
  auto lattice = image_of_one_minus(b.finite);
  for (WeylElt y : d.elements()) {
    if (d.mul(d.mul(y, a.finite), d.inverse(y)) != b.finite) continue;
    if (lattice->contains(b.translation - d.act(y, a.translation))) return true;
  }
  return false;
}

ClassPtr ConjugacyClasses::class_of(const AffElt& w) const {
  {
    std::lock_guard lock(registry_mutex_);
    auto it = class_of_element_.find(w);
    if (it != class_of_element_.end()) return it->second;
  }
  return class_of_minimal(minimize(w).min_elt);
}

ClassPtr ConjugacyClasses::class_of_minimal(const AffElt& m) const {
  std::lock_guard lock(registry_mutex_);
  auto it = class_of_element_.find(m);
  if (it != class_of_element_.end()) return it->second;

  const std::size_t len = affine_.length(m);
  auto candidates = affine_.elements_of_length(affine_.kottwitz(m), len);
  auto info = std::make_shared<ConjClass>();
  for (const auto& c : *candidates)
    if (are_conjugate(m, c)) info->minimal_elements.push_back(c);
  if (info->minimal_elements.empty()) throw IntegrityError("element missing from its own length layer");
  info->rep = info->minimal_elements.front();
  info->min_length = len;
  info->invariant = class_invariant(m);
  info->straight = Rational(static_cast<Int>(len)) == datum().two_rho_pairing(info->invariant.newton);
  ClassPtr ptr = info;
  for (const auto& e : info->minimal_elements) class_of_element_.emplace(e, ptr);
  classes_.emplace(ptr->rep, ptr);
  return ptr;
}

ClassPtr ConjugacyClasses::find_class(const AffElt& rep) const {
  std::lock_guard lock(registry_mutex_);
  auto it = classes_.find(rep);
  return it == classes_.end() ? nullptr : it->second;
}

std::vector<ClassPtr> ConjugacyClasses::enumerate_classes(std::size_t max_len, Int kappa_window) const {
  std::map<AffElt, ClassPtr> found;
  for (const auto& kappa : affine_.kappa_window(kappa_window))
    for (std::size_t len = 0; len <= max_len; ++len)
      for (const auto& e : *affine_.elements_of_length(kappa, len)) {
        ClassPtr known;
        {
          std::lock_guard lock(registry_mutex_);
          auto it = class_of_element_.find(e);
          if (it != class_of_element_.end()) known = it->second;
        }
        if (!known) {
          if (!is_minimal(e)) continue;
          known = class_of_minimal(e);
        }
        if (known->min_length == len) found.emplace(known->rep, known);
      }
  std::vector<ClassPtr> out;
  for (auto& [rep, c] : found) out.push_back(c);
  std::stable_sort(out.begin(), out.end(), [](const ClassPtr& a, const ClassPtr& b) {
    if (a->min_length != b->min_length) return a->min_length < b->min_length;
    return a->rep < b->rep;
  });
  return out;
}

std::vector<ClassPtr> ConjugacyClasses::straight_classes(std::size_t max_pairing, Int kappa_window) const {
  std::vector<ClassPtr> out;
  for (auto& c : enumerate_classes(max_pairing, kappa_window))
    if (c->straight) out.push_back(c);
  return out;
}

bool ConjugacyClasses::straight_class_leq(const ConjClass& lower, const ConjClass& upper) const {
  if (!lower.straight || !upper.straight) throw PreconditionError("straight_class_leq needs straight classes");
  for (const auto& hi : upper.minimal_elements)
    for (const auto& lo : lower.minimal_elements)
      if (affine_.bruhat_leq(lo, hi)) return true;
  return false;
}

bool ConjugacyClasses::invariant_leq(const ClassInvariant& lower, const ClassInvariant& upper) const {
  if (lower.kappa != upper.kappa) return false;
  const RootDatum& d = datum();
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) cols.push_back(d.coroot(i));
  auto coeffs = solve_in_span(cols, upper.newton - lower.newton);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::string ConjugacyClasses::class_id(const ConjClass& c) const { return class_id(c.rep); }

std::string ConjugacyClasses::class_id(const AffElt& rep) const {
  return datum().hash_hex() + ":" + affine_.encode(rep);
}

}  // namespace alcove
