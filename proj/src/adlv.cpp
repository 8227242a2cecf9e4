#include "alcove/adlv.hpp"

#include <algorithm>
#include <set>

namespace alcove {

std::string dim_str(const Dim& d) { return d ? d->str() : "-inf"; }

AdlvEngine::AdlvEngine(const CocenterEngine& cocenter) : cocenter_(cocenter) {}

// -- σ-conjugacy classes --------------------------------------------------------

std::vector<bool> AdlvEngine::roots_in_span(std::uint64_t mask) const {
  const RootDatum& d = datum();
  std::vector<bool> out(d.num_roots());
  for (std::size_t k = 0; k < d.num_roots(); ++k) {
    const IntVec& c = d.root_coefficients(k);
    bool inside = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0 && !(mask >> i & 1)) inside = false;
    out[k] = inside;
  }
  return out;
}

std::size_t AdlvEngine::compute_defect(const ConjClass& straight) const {
  const RootDatum& d = datum();
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (d.pairing(straight.invariant.newton, d.simple_root(i)).is_zero()) mask |= std::uint64_t{1} << i;
  auto in_m = roots_in_span(mask);
  // A straight element of the class that has length zero in the centralizer Levi.
  for (const auto& m : straight.minimal_elements) {
    if (!d.in_standard_parabolic(m.finite, mask)) continue;
    WeylElt ui = d.inverse(m.finite);
    Int len_m = 0;
    for (std::size_t k = 0; k < d.num_positive() && len_m == 0; ++k) {
      if (!in_m[k]) continue;
      Int p = dot(m.translation, d.root(k));
      if (!d.is_positive(d.act_on_root(ui, k))) p -= 1;
      len_m += p < 0 ? -p : p;
    }
    if (len_m == 0) return d.rank() - d.fixed_space_dim(m.finite);
  }
  throw IntegrityError("no Levi length-zero element in straight class " + affine().encode(straight.rep));
}

SigmaClass AdlvEngine::sigma_class_from_invariant(const ClassInvariant& inv) const {
  {
    std::lock_guard lock(sigma_mutex_);
    auto it = sigma_cache_.find(inv);
    if (it != sigma_cache_.end()) return it->second;
  }
  const RootDatum& d = datum();
  if (inv.newton.size() != d.rank() || inv.kappa.size() != d.pi1_moduli().size())
    throw InputError("class invariant has the wrong shape for this datum");
  if (!d.is_dominant(inv.newton)) throw InputError("Newton point " + format_vec(inv.newton) + " is not dominant");
  if (d.kottwitz(d.kottwitz_lift(inv.kappa)) != inv.kappa)
    throw InputError("Kottwitz coordinates " + format_vec(inv.kappa) + " are not canonical");
  Rational pairing = d.two_rho_pairing(inv.newton);
  auto not_found = [&] {
    return InputError("no straight class with kappa=" + format_vec(inv.kappa) + " nu=" + format_vec(inv.newton));
  };
  if (!pairing.is_integer() || pairing.sign() < 0) throw not_found();

  ClassPtr cls;
  for (const auto& e : *affine().elements_of_length(inv.kappa, static_cast<std::size_t>(pairing.num()))) {
    if (classes().newton(e) == inv.newton) {
      cls = classes().class_of_minimal(e);
      break;
    }
  }
  if (!cls) throw not_found();

  SigmaClass out;
  out.invariant = inv;
  out.straight_class = cls;
  out.basic = true;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (!d.pairing(inv.newton, d.simple_root(i)).is_zero()) out.basic = false;
  out.defect = compute_defect(*cls);

  std::lock_guard lock(sigma_mutex_);
  return sigma_cache_.emplace(inv, out).first->second;
}

SigmaClass AdlvEngine::sigma_class_of(const AffElt& w) const {
  return sigma_class_from_invariant(classes().class_invariant(w));
}

SigmaClass AdlvEngine::basic_class(const PiOneElt& kappa) const {
  const RootDatum& d = datum();
  RatVec nu = d.central_projection(to_rational(d.kottwitz_lift(kappa)));
  return sigma_class_from_invariant({kappa, nu});
}

bool AdlvEngine::bg_leq(const SigmaClass& b, const SigmaClass& b2) const {
  return classes().invariant_leq(b.invariant, b2.invariant);
}

bool AdlvEngine::bg_leq_bruhat(const SigmaClass& b, const SigmaClass& b2) const {
  return classes().straight_class_leq(*b.straight_class, *b2.straight_class);
}

// -- dimension = degree -----------------------------------------------------------

ADLVReport AdlvEngine::dim_adlv(const AffElt& w, const SigmaClass& b) const {
  ADLVReport r;
  r.w = w;
  r.b = b.invariant;
  const Int lw = static_cast<Int>(affine().length(w));
  const Rational nu_pairing = datum().two_rho_pairing(b.invariant.newton);
  auto dec = cocenter_.class_polynomials(w);
  for (const auto& [rep, f] : dec.terms) {
    ClassPtr cls = classes().class_of_minimal(rep);
    if (cls->invariant != b.invariant) continue;
    const Int lo = static_cast<Int>(cls->min_length);
    Rational value = Rational(lw + lo + *f.deg(), 2) - nu_pairing;
    r.terms.push_back({rep, cls->min_length, f, value});
    if (!r.dim || value > *r.dim) r.dim = value;
  }
  r.nonempty = !r.terms.empty();
  return r;
}

ADLVReport AdlvEngine::dim_min_length(const AffElt& w, const SigmaClass& b) const {
  if (!classes().is_minimal(w)) throw PreconditionError("dim_min_length needs a minimal length element");
  ADLVReport r;
  r.w = w;
  r.b = b.invariant;
  ClassInvariant inv = classes().class_invariant(w);
  if (inv == b.invariant) {
    r.nonempty = true;
    r.dim = Rational(static_cast<Int>(affine().length(w))) - datum().two_rho_pairing(inv.newton);
  }
  return r;
}

ADLVReport AdlvEngine::full_report(const AffElt& w, const SigmaClass& b) const {
  ADLVReport r = dim_adlv(w, b);
  const RootDatum& d = datum();
  auto agree = [&](bool nonempty, const Dim& dim) { return nonempty == r.nonempty && dim == r.dim; };

  if (classes().is_minimal(w)) {
    auto m = dim_min_length(w, b);
    r.min_length = MethodResult{m.nonempty, m.dim, agree(m.nonempty, m.dim), "minimal length"};
  }
  if (b.basic) {
    bool ne = basic_nonempty_via_alcoves(w, b);
    r.p_alcove = MethodResult{ne, std::nullopt, ne == r.nonempty, "semistandard P-alcoves"};
    if (d.is_connected() && affine().is_shrunken(w)) {
      bool sne = shrunken_nonempty(w, b);
      Dim sd = shrunken_dim(w, b);
      r.shrunken = MethodResult{sne, sd, agree(sne, sd), "shrunken chamber, eta=" + d.word_string(affine().eta(w))};
    }
  }
  if (w.finite == d.longest_element()) {
    IntVec mu = d.act(d.longest_element(), w.translation);
    if (d.is_dominant(to_rational(mu))) {
      auto lc = longest_coset_case(mu, b);
      r.longest_coset = lc.longest_coset;
    }
  }
  for (const auto* m : {&r.min_length, &r.shrunken, &r.p_alcove, &r.longest_coset})
    if (m->has_value()) r.agreement = r.agreement.value_or(true) && (*m)->agrees;
  return r;
}

// -- P-alcoves --------------------------------------------------------------------

const std::vector<ParabolicDatum>& AdlvEngine::semistandard_parabolics() const {
  std::call_once(parabolics_once_, [this] {
    const RootDatum& d = datum();
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
    const std::uint64_t masks = std::uint64_t{1} << d.semisimple_rank();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      auto in_j = roots_in_span(mask);
      for (WeylElt v : d.elements()) {
        ParabolicDatum p;
        for (std::size_t k = 0; k < d.num_roots(); ++k) {
          if (in_j[k]) p.levi_roots.push_back(d.act_on_root(v, k));
          else if (d.is_positive(k)) p.n_roots.push_back(d.act_on_root(v, k));
        }
        std::sort(p.levi_roots.begin(), p.levi_roots.end());
        std::sort(p.n_roots.begin(), p.n_roots.end());
        if (!seen.emplace(p.levi_roots, p.n_roots).second) continue;
        p.levi_simple_mask = mask;
        p.witness = v;
        parabolics_.push_back(std::move(p));
      }
    }
  });
  return parabolics_;
}

bool AdlvEngine::in_levi_weyl(WeylElt u, const ParabolicDatum& p) const {
  const RootDatum& d = datum();
  WeylElt conj = d.mul(d.mul(d.inverse(p.witness), u), p.witness);
  return d.in_standard_parabolic(conj, p.levi_simple_mask);
}

bool AdlvEngine::is_p_alcove(const AffElt& w, const ParabolicDatum& p) const {
  if (!in_levi_weyl(w.finite, p)) return false;
  const RootDatum& d = datum();
  RatVec bary = affine().barycenter(w);
  for (std::size_t k : p.n_roots)
    if (d.pairing(bary, k).floor() > d.pairing(d.base_barycenter(), k).floor()) return false;
  return true;
}

ClassInvariant AdlvEngine::induced_basic_invariant(const AffElt& w, const ParabolicDatum& p) const {
  const RootDatum& d = datum();
  RatVec sum(d.rank(), Rational(0));
  Int count = 0;
  for (WeylElt u : d.elements()) {
    if (!in_levi_weyl(u, p)) continue;
    sum = sum + to_rational(d.act(u, w.translation));
    ++count;
  }
  return {affine().kottwitz(w), d.dominant_rep(scale(sum, Rational(1, count))).first};
}

bool AdlvEngine::basic_nonempty_via_alcoves(const AffElt& w, const SigmaClass& b) const {
  if (!b.basic) throw PreconditionError("basic_nonempty_via_alcoves needs a basic class");
  for (const auto& p : semistandard_parabolics())
    if (is_p_alcove(w, p) && induced_basic_invariant(w, p) != b.invariant) return false;
  return true;
}

// -- shrunken chamber ---------------------------------------------------------------

bool AdlvEngine::shrunken_nonempty(const AffElt& w, const SigmaClass& b) const {
  const RootDatum& d = datum();
  if (!b.basic) throw PreconditionError("shrunken route needs a basic class");
  if (!d.is_connected()) throw PreconditionError("shrunken route needs a connected Dynkin diagram");
  if (!affine().is_shrunken(w)) throw PreconditionError("element is not in the shrunken Weyl chamber");
  const std::uint64_t full = (std::uint64_t{1} << d.semisimple_rank()) - 1;
  return affine().kottwitz(w) == b.invariant.kappa && d.support(affine().eta(w)) == full;
}

Dim AdlvEngine::shrunken_dim(const AffElt& w, const SigmaClass& b) const {
  if (!shrunken_nonempty(w, b)) return std::nullopt;
  Int lw = static_cast<Int>(affine().length(w));
  Int le = static_cast<Int>(datum().length(affine().eta(w)));
  return Rational(lw + le - static_cast<Int>(b.defect), 2);
}

// -- w0 t^mu ------------------------------------------------------------------------

ADLVReport AdlvEngine::longest_coset_case(const IntVec& mu, const SigmaClass& b) const {
  const RootDatum& d = datum();
  if (mu.size() != d.rank() || !d.is_dominant(to_rational(mu)))
    throw PreconditionError("longest_coset_case needs a dominant coweight");
  AffElt w = affine().mul(affine().finite(d.longest_element()), affine().translation(mu));
  ADLVReport r = dim_adlv(w, b);
  SigmaClass tmu = sigma_class_of(affine().translation(mu));
  MethodResult m;
  m.nonempty = bg_leq(b, tmu);
  if (m.nonempty)
    m.dim = (d.two_rho_pairing(to_rational(mu)) - d.two_rho_pairing(b.invariant.newton)) / Rational(2) +
            Rational(static_cast<Int>(d.length(d.longest_element()))) - Rational(static_cast<Int>(b.defect), 2);
  m.agrees = m.nonempty == r.nonempty && m.dim == r.dim;
  m.detail = "w0 t^mu, mu=" + format_vec(mu);
  r.longest_coset = m;
  r.agreement = m.agrees;
  return r;
}

// -- split b ------------------------------------------------------------------------

Dim AdlvEngine::split_b_formula(WeylElt x, WeylElt y, const IntVec& lambda) const {
  const RootDatum& d = datum();
  WeylElt yx = d.mul(y, x);
  const std::uint64_t full = (std::uint64_t{1} << d.semisimple_rank()) - 1;
  if (d.support(yx) != full) return std::nullopt;
  Int ls = static_cast<Int>(d.length(x) + d.length(y) + d.length(yx));
  return d.two_rho_pairing(to_rational(lambda)) / Rational(2) + Rational(ls, 2);
}

SplitBRecord AdlvEngine::split_b_checker(WeylElt x, WeylElt y, const IntVec& mu, const IntVec& lambda,
                                         Int regularity_threshold) const {
  const RootDatum& d = datum();
  const auto& a = affine();
  if (!d.is_connected()) throw PreconditionError("split-b check needs a connected Dynkin diagram");
  if (mu.size() != d.rank() || !d.is_dominant(to_rational(mu))) throw PreconditionError("mu must be dominant");
  if (lambda.size() != d.rank() || !is_zero(d.kottwitz(lambda)))
    throw PreconditionError("lambda must lie in the coroot lattice");
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (dot(lambda, d.root(d.simple_root(i))) < 1) throw PreconditionError("lambda must be dominant regular");

  SigmaClass b = sigma_class_of(a.translation(mu));
  auto evaluate = [&](const IntVec& lam) {
    std::vector<SplitBVariant> out;
    AffElt t = a.translation(mu + lam);
    for (bool swapped : {false, true}) {
      WeylElt left = swapped ? y : x, right = swapped ? x : y;
      for (bool chamber_on_y : {true, false}) {
        SplitBVariant v;
        v.assembly = swapped ? "y t x" : "x t y";
        v.chamber = chamber_on_y ? "t y" : "t x";
        v.w = a.mul(a.mul(a.finite(left), t), a.finite(right));
        v.chamber_ok = a.chamber_of(a.mul(t, a.finite(chamber_on_y ? y : x))) == d.identity();
        v.formula = split_b_formula(left, right, lam);
        v.oracle = dim_adlv(v.w, b).dim;
        v.agrees = v.formula == v.oracle;
        out.push_back(std::move(v));
      }
    }
    return out;
  };

  SplitBRecord rec{x, y, mu, lambda, evaluate(lambda), std::nullopt};
  for (Int k = regularity_threshold; k >= 1; --k) {
    IntVec lam = lambda;
    for (auto& c : lam) c = checked::mul(c, k);
    if (!evaluate(lam).front().agrees) break;
    rec.agreeing_from = k;
  }
  return rec;
}

// -- basic comparison scan -------------------------------------------------------------

GhkrTable AdlvEngine::ghkr_scan(const SigmaClass& b, const SigmaClass& b_basic, std::size_t max_len) const {
  if (b.invariant.kappa != b_basic.invariant.kappa) throw InputError("ghkr_scan needs equal Kottwitz invariants");
  if (!b_basic.basic) throw PreconditionError("ghkr_scan compares against a basic class");
  const RootDatum& d = datum();
  GhkrTable table;
  table.b = b.invariant;
  table.b_basic = b_basic.invariant;
  table.offset = -d.two_rho_pairing(b.invariant.newton) / Rational(2) +
                 Rational(static_cast<Int>(b_basic.defect) - static_cast<Int>(b.defect), 2);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& w : *affine().elements_of_length(b.invariant.kappa, len)) {
      GhkrRow row;
      row.w = w;
      row.length = len;
      row.dim_b = dim_adlv(w, b).dim;
      row.dim_basic = dim_adlv(w, b_basic).dim;
      if (row.dim_basic) row.predicted = *row.dim_basic + table.offset;
      row.agrees = (!row.dim_b && !row.dim_basic) || (row.dim_b && row.dim_basic && *row.dim_b == *row.predicted);
      if (!row.agrees) {
        ++table.disagreements;
        table.agreeing_from = len + 1;
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace alcove
