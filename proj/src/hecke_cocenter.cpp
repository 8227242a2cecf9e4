#include "alcove/hecke_cocenter.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace alcove {

PivotRule PivotRule::parse(const std::string& text) {
  if (text == "canonical") return {};
  if (text == "reversed") return {Kind::Reversed, 0};
  if (text.rfind("seeded:", 0) == 0) {
    std::string digits = text.substr(7);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InputError("malformed pivot seed in '" + text + "'");
    return {Kind::Seeded, std::stoull(digits)};
  }
  throw InputError("unknown pivot rule '" + text + "' (expected canonical, reversed or seeded:N)");
}

std::string PivotRule::str() const {
  switch (kind) {
    case Kind::Canonical: return "canonical";
    case Kind::Reversed: return "reversed";
    case Kind::Seeded: return "seeded:" + std::to_string(seed);
  }
  return "canonical";
}

CocenterEngine::CocenterEngine(const ConjugacyClasses& classes, PivotRule pivot, EngineLimits limits)
    : classes_(classes), pivot_(pivot), limits_(limits) {}

HeckeSum CocenterEngine::generator_product(std::size_t s, const AffElt& w, Side side) const {
  const auto& a = affine();
  AffElt sw = side == Side::Left ? a.left_mul_simple(s, w) : a.right_mul_simple(w, s);
  if (a.length(sw) > a.length(w)) return {{sw, LaurentPoly::constant(1)}};
  return {{w, LaurentPoly::z()}, {sw, LaurentPoly::constant(1)}};
}

AffElt CocenterEngine::register_orbit(const AffElt& w) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = fingerprint_of_.find(w);
    if (it != fingerprint_of_.end()) return it->second;
  }
  auto orbit = classes_.cyclic_orbit(w);
  const AffElt& fp = orbit.front();
  std::unique_lock lock(memo_mutex_);
  for (const auto& e : orbit) fingerprint_of_.emplace(e, fp);
  return fp;
}

AffElt CocenterEngine::fingerprint(const AffElt& w) const { return register_orbit(w); }

CocenterEngine::TermsPtr CocenterEngine::lookup(const AffElt& fp) const {
  std::shared_lock lock(memo_mutex_);
  auto it = memo_.find(fp);
  return it == memo_.end() ? nullptr : it->second;
}

CocenterEngine::TermsPtr CocenterEngine::store(const AffElt& fp, ClassTerms terms) const {
  auto ptr = std::make_shared<const ClassTerms>(std::move(terms));
  std::unique_lock lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(fp, ptr);
  if (!inserted) {
    if (*it->second != *ptr)
      throw IntegrityError("conflicting class polynomials for orbit of " + affine().encode(fp));
    return it->second;
  }
  if (memo_.size() > limits_.max_memo_entries)
    throw ResourceLimitError("class-polynomial memo exceeded " + std::to_string(limits_.max_memo_entries) +
                             " entries");
  return ptr;
}

std::vector<AffElt> CocenterEngine::pivot_order(std::vector<AffElt> orbit, const AffElt& fp) const {
  switch (pivot_.kind) {
    case PivotRule::Kind::Canonical: break;
    case PivotRule::Kind::Reversed: std::reverse(orbit.begin(), orbit.end()); break;
    case PivotRule::Kind::Seeded: {
      std::mt19937_64 rng(pivot_.seed ^ AffEltHash{}(fp));
      std::shuffle(orbit.begin(), orbit.end(), rng);
      break;
    }
  }
  return orbit;
}

std::vector<std::size_t> CocenterEngine::simple_order(const AffElt& fp) const {
  std::vector<std::size_t> order(affine().num_simple());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  switch (pivot_.kind) {
    case PivotRule::Kind::Canonical: break;
    case PivotRule::Kind::Reversed: std::reverse(order.begin(), order.end()); break;
    case PivotRule::Kind::Seeded: {
      std::mt19937_64 rng(~pivot_.seed ^ AffEltHash{}(fp));
      std::shuffle(order.begin(), order.end(), rng);
      break;
    }
  }
  return order;
}

CocenterEngine::TermsPtr CocenterEngine::compute(const AffElt& w, std::size_t& nodes) const {
  AffElt fp = register_orbit(w);
  if (auto hit = lookup(fp)) return hit;
  if (++nodes > limits_.max_nodes)
    throw ResourceLimitError("class-polynomial reduction exceeded " + std::to_string(limits_.max_nodes) + " nodes");

  const auto& a = affine();
  const std::size_t len = a.length(fp);
  auto simples = simple_order(fp);
  for (const auto& m : pivot_order(classes_.cyclic_orbit(fp), fp)) {
    for (std::size_t s : simples) {
      AffElt sms = a.conj_by_simple(s, m);
      if (a.length(sms) >= len) continue;
      TermsPtr lower = compute(a.left_mul_simple(s, m), nodes);
      TermsPtr same = compute(sms, nodes);
      ClassTerms out = *same;
      const LaurentPoly z = LaurentPoly::z();
      for (const auto& [rep, p] : *lower) {
        LaurentPoly& slot = out[rep];
        slot += z * p;
        if (slot.is_zero()) out.erase(rep);
      }
      return store(fp, std::move(out));
    }
  }
  ClassPtr cls = classes_.class_of_minimal(fp);
  return store(fp, ClassTerms{{cls->rep, LaurentPoly::constant(1)}});
}

ClassDecomposition CocenterEngine::class_polynomials(const AffElt& w) const {
  std::size_t nodes = 0;
  TermsPtr terms = compute(w, nodes);
  return {w, classes_.datum().hash(), *terms};
}

std::size_t CocenterEngine::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

std::vector<std::pair<AffElt, ClassTerms>> CocenterEngine::memo_entries() const {
  std::vector<std::pair<AffElt, ClassTerms>> out;
  {
    std::shared_lock lock(memo_mutex_);
    out.reserve(memo_.size());
    for (const auto& [fp, terms] : memo_) out.emplace_back(fp, *terms);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void CocenterEngine::insert_memo(const AffElt& element, ClassTerms terms) const {
  for (const auto& [rep, p] : terms)
    if (p.is_zero()) throw IntegrityError("zero class polynomial in cached decomposition");
  store(register_orbit(element), std::move(terms));
}

DecompositionCheck check_decomposition(const CocenterEngine& engine, const ClassDecomposition& d) {
  DecompositionCheck out;
  const auto& a = engine.affine();
  const Int lw = static_cast<Int>(a.length(d.source));
  BigInt total = 0;
  for (const auto& [rep, p] : d.terms) {
    if (!p.in_nonnegative_z_span()) out.nonnegative = false;
    auto deg = p.deg();
    if (deg && *deg > lw - static_cast<Int>(a.length(rep))) out.degree_bound = false;
    total += p.eval_at_one();
  }
  out.unit_at_one = total == 1;
  return out;
}

}  // namespace alcove
