#include "alcove/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>

#include "alcove/workspace.hpp"

namespace alcove {

namespace {

class Recorder {
public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < 12) r_.failures.push_back(what());
  }

private:
  CriterionResult& r_;
};

std::vector<SigmaClass> straight_sigma_classes(const Workspace& ws, std::size_t max_pairing) {
  std::vector<SigmaClass> out;
  for (const auto& c : ws.classes().straight_classes(max_pairing))
    out.push_back(ws.adlv().sigma_class_from_invariant(c->invariant));
  return out;
}

std::string inv_str(const ClassInvariant& i) { return "(" + format_vec(i.kappa) + ", " + format_vec(i.newton) + ")"; }

// C1: three pivot rules give identical decompositions.
void pivot_independence(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto canon = Workspace::preset(name);
    auto rev = Workspace::preset(name, PivotRule::parse("reversed"));
    auto seeded = Workspace::preset(name, PivotRule::parse("seeded:7"));
    for (const auto& w : canon->elements_up_to(o.max_len)) {
      auto a = canon->cocenter().class_polynomials(w).terms;
      auto b = rev->cocenter().class_polynomials(w).terms;
      auto c = seeded->cocenter().class_polynomials(w).terms;
      rec.check(a == b && a == c, [&] { return name + ": pivot rules disagree on " + canon->affine().encode(w); });
    }
  }
}

// C2: shrunken route against the class-polynomial verdict.
void shrunken_route(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    const auto& a = ws->affine();
    for (const auto& kappa : a.kappa_window(0)) {
      SigmaClass b = ws->adlv().basic_class(kappa);
      for (const auto& w : ws->elements_up_to(o.max_len)) {
        if (!a.is_shrunken(w)) continue;
        auto r = ws->adlv().dim_adlv(w, b);
        bool ne = ws->adlv().shrunken_nonempty(w, b);
        Dim dim = ws->adlv().shrunken_dim(w, b);
        rec.check(ne == r.nonempty && dim == r.dim, [&] {
          return name + ": shrunken " + a.encode(w) + " b=" + inv_str(b.invariant) + " formula " + dim_str(dim) +
                 " oracle " + dim_str(r.dim);
        });
      }
    }
  }
  auto pgl2 = Workspace::preset("PGL2");
  const auto& e = pgl2->adlv();
  const auto& a = pgl2->affine();
  AffElt w1 = a.parse_key("s0 s1 s0"), w2 = a.parse_key("t[3] s1");
  SigmaClass one = e.basic_class({0}), tau = e.basic_class({1});
  rec.check(a.is_shrunken(w1) && e.shrunken_dim(w1, one) == Dim(2) && e.dim_adlv(w1, one).dim == Dim(2),
            [] { return std::string("PGL2: dim X_{s0 s1 s0}([1]) != 2"); });
  rec.check(a.is_shrunken(w2) && e.shrunken_dim(w2, tau) == Dim(1) && e.dim_adlv(w2, tau).dim == Dim(1),
            [] { return std::string("PGL2: dim X_{t^{3w} s1}([tau]) != 1"); });
}

// C3: minimal length elements.
void minimal_length(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    auto bs = straight_sigma_classes(*ws, o.max_len);
    for (const auto& w : ws->elements_up_to(o.max_len)) {
      if (!ws->classes().is_minimal(w)) continue;
      for (const auto& b : bs) {
        auto m = ws->adlv().dim_min_length(w, b);
        auto r = ws->adlv().dim_adlv(w, b);
        rec.check(m.nonempty == r.nonempty && m.dim == r.dim, [&] {
          return name + ": minimal " + ws->affine().encode(w) + " b=" + inv_str(b.invariant) + " closed form " +
                 dim_str(m.dim) + " oracle " + dim_str(r.dim);
        });
      }
    }
  }
  auto sl2 = Workspace::preset("SL2");
  const auto& a = sl2->affine();
  SigmaClass one = sl2->adlv().basic_class({});
  rec.check(!sl2->adlv().dim_adlv(a.parse_key("t[1]"), one).nonempty &&
                !sl2->adlv().dim_min_length(a.parse_key("t[1]"), one).nonempty,
            [] { return std::string("SL2: X_{t^a}([1]) should be empty"); });
  rec.check(sl2->adlv().dim_adlv(a.parse_key("s0"), one).dim == Dim(1) &&
                sl2->adlv().dim_min_length(a.parse_key("s0"), one).dim == Dim(1),
            [] { return std::string("SL2: dim X_{s0}([1]) != 1"); });
}

// C4: w0 t^mu.
void longest_coset(const SelfcheckOptions& o, Recorder& rec) {
  const std::size_t bound = 8;
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    const auto& d = ws->datum();
    auto bs = straight_sigma_classes(*ws, bound);
    for (const auto& t : ws->elements_up_to(bound)) {
      if (t.finite != d.identity() || !d.is_dominant(to_rational(t.translation))) continue;
      for (const auto& b : bs) {
        auto r = ws->adlv().longest_coset_case(t.translation, b);
        rec.check(r.longest_coset->agrees, [&] {
          return name + ": w0 t^" + format_vec(t.translation) + " b=" + inv_str(b.invariant) + " formula " +
                 (r.longest_coset->nonempty ? dim_str(r.longest_coset->dim) : "-inf") + " oracle " + dim_str(r.dim);
        });
      }
    }
  }
  auto sl2 = Workspace::preset("SL2");
  const auto& e = sl2->adlv();
  SigmaClass one = e.basic_class({}), ta = e.sigma_class_of(sl2->affine().translation({1}));
  auto r1 = e.longest_coset_case({1}, one), r2 = e.longest_coset_case({1}, ta);
  rec.check(r1.w == sl2->affine().parse_key("s1 s0 s1"), [] { return std::string("SL2: w0 t^a != s1 s0 s1"); });
  rec.check(r1.dim == Dim(2) && r1.longest_coset->dim == Dim(2), [] { return std::string("SL2: dim X_{s1 s0 s1}([1]) != 2"); });
  rec.check(r2.dim == Dim(1) && r2.longest_coset->dim == Dim(1),
            [] { return std::string("SL2: dim X_{s1 s0 s1}([t^a]) != 1"); });
}

// C5: f is a bijection from straight classes onto the invariants of the window.
void straight_bijection(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    auto all = ws->classes().enumerate_classes(o.max_len);
    std::map<ClassInvariant, int> straight_hits;
    for (const auto& c : all)
      if (c->straight) ++straight_hits[c->invariant];
    for (const auto& [inv, n] : straight_hits)
      rec.check(n == 1, [&] { return name + ": " + std::to_string(n) + " straight classes with f=" + inv_str(inv); });
    for (const auto& c : all)
      rec.check(straight_hits.count(c->invariant) == 1, [&] {
        return name + ": invariant of " + ws->affine().encode(c->rep) + " has no straight class";
      });
  }
  auto sl2 = Workspace::preset("SL2");
  const auto& a = sl2->affine();
  auto c0 = sl2->classes().class_of(a.parse_key("s0")), c1 = sl2->classes().class_of(a.parse_key("s1"));
  rec.check(c0 != c1 && c0->rep != c1->rep && c0->invariant == c1->invariant && !c0->straight,
            [] { return std::string("SL2: classes of s0 and s1 should be distinct with equal f"); });
}

// C6: positivity, degree bound, value at v = 1.
void positivity(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    for (const auto& w : ws->elements_up_to(o.max_len)) {
      auto dec = ws->cocenter().class_polynomials(w);
      auto chk = check_decomposition(ws->cocenter(), dec);
      rec.check(chk.nonnegative, [&] { return name + ": negative z-coefficient for " + ws->affine().encode(w); });
      rec.check(chk.degree_bound, [&] { return name + ": degree bound fails for " + ws->affine().encode(w); });
      rec.check(chk.unit_at_one, [&] { return name + ": v=1 sum != 1 for " + ws->affine().encode(w); });
    }
  }
}

// C7: Bruhat order on straight classes versus the invariant order.
void order_equivalence(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    auto straight = ws->classes().straight_classes(o.max_len);
    for (const auto& lo : straight)
      for (const auto& hi : straight) {
        bool bruhat = ws->classes().straight_class_leq(*lo, *hi);
        bool inv = ws->classes().invariant_leq(lo->invariant, hi->invariant);
        rec.check(bruhat == inv, [&] {
          return name + ": " + inv_str(lo->invariant) + " <= " + inv_str(hi->invariant) + " bruhat " +
                 std::to_string(bruhat) + " invariant " + std::to_string(inv);
        });
      }
  }
}

// C8: defect.
void defect_oracle(const SelfcheckOptions& o, Recorder& rec) {
  for (Int n = 2; n <= 5; ++n) {
    auto ws = Workspace::preset("GL" + std::to_string(n));
    for (Int k = -n; k <= n; ++k) {
      std::size_t got = ws->adlv().basic_class({k}).defect;
      Int expected = n - std::gcd(n, k < 0 ? -k : k);
      rec.check(static_cast<Int>(got) == expected, [&] {
        return "GL" + std::to_string(n) + " kappa=" + std::to_string(k) + ": defect " + std::to_string(got) +
               " expected " + std::to_string(expected);
      });
    }
  }
  auto presets = o.presets;
  presets.push_back("GL3");
  for (const auto& name : presets) {
    auto ws = Workspace::preset(name);
    const auto& d = ws->datum();
    for (const auto& t : ws->elements_up_to(std::min<std::size_t>(o.max_len, 8), 1)) {
      if (t.finite != d.identity()) continue;
      auto b = ws->adlv().sigma_class_of(t);
      rec.check(b.defect == 0, [&] { return name + ": defect of [t^" + format_vec(t.translation) + "] is nonzero"; });
    }
  }
}

// C9: P-alcoves.
void p_alcoves(const SelfcheckOptions& o, Recorder& rec) {
  for (const auto& name : o.presets) {
    auto ws = Workspace::preset(name);
    const auto& e = ws->adlv();
    for (const auto& kappa : ws->affine().kappa_window(0)) {
      SigmaClass b = e.basic_class(kappa);
      for (const auto& w : ws->elements_up_to(o.max_len)) {
        bool nonempty = e.dim_adlv(w, b).nonempty;
        if (nonempty)
          for (const auto& p : e.semistandard_parabolics())
            if (e.is_p_alcove(w, p))
              rec.check(e.induced_basic_invariant(w, p) == b.invariant, [&] {
                return name + ": nonempty X_w(b) for " + ws->affine().encode(w) + " violates a P-alcove clause";
              });
        rec.check(e.basic_nonempty_via_alcoves(w, b) == nonempty, [&] {
          return name + ": P-alcove criterion disagrees for " + ws->affine().encode(w) + " b=" + inv_str(b.invariant);
        });
      }
    }
  }
}

// C10: report-only scanners produce well-formed output and the pinned rows.
void scanners(const SelfcheckOptions& o, Recorder& rec) {
  auto ws = Workspace::preset("SL2");
  const auto& d = ws->datum();
  const auto& a = ws->affine();
  const auto& e = ws->adlv();
  WeylElt s1 = d.simple_reflection(0);

  auto agree = e.split_b_checker(s1, d.identity(), {0}, {1}, 3);
  rec.check(agree.variants.size() == 4, [] { return std::string("split-b: expected 4 variants"); });
  const auto& v1 = agree.variants.front();
  rec.check(v1.w == a.parse_key("s1 s0 s1") && v1.formula == Dim(2) && v1.oracle == Dim(2) && v1.agrees,
            [] { return std::string("split-b (s1, 1, 0, a): expected agreement at dim 2"); });
  auto disagree = e.split_b_checker(d.identity(), s1, {0}, {1}, 3);
  const auto& v2 = disagree.variants.front();
  rec.check(v2.w == a.parse_key("s0") && v2.formula == Dim(2) && v2.oracle == Dim(1) && !v2.agrees,
            [] { return std::string("split-b (1, s1, 0, a): expected formula 2 against oracle 1"); });

  SigmaClass b = e.sigma_class_of(a.translation({1}));
  SigmaClass basic = e.basic_class({});
  auto table = e.ghkr_scan(b, basic, o.max_len);
  rec.check(table.rows.size() == ws->elements_up_to(o.max_len).size(),
            [] { return std::string("ghkr scan: row count mismatch"); });
  rec.check(table.offset == Rational(-1), [] { return std::string("ghkr scan: offset should be -1"); });
  std::size_t disagreements = 0;
  for (const auto& row : table.rows) {
    bool consistent = row.length == a.length(row.w) &&
                      (row.dim_basic ? row.predicted == Dim(*row.dim_basic + table.offset) : !row.predicted) &&
                      row.agrees == ((!row.dim_b && !row.dim_basic) || (row.dim_b && row.dim_basic && row.dim_b == row.predicted));
    if (!row.agrees) ++disagreements;
    rec.check(consistent, [&] { return "ghkr scan: malformed row for " + a.encode(row.w); });
  }
  rec.check(disagreements == table.disagreements, [] { return std::string("ghkr scan: disagreement count"); });
  auto same = e.ghkr_scan(basic, basic, o.max_len);
  rec.check(same.disagreements == 0 && same.offset == Rational(0),
            [] { return std::string("ghkr scan: b = b' should agree everywhere with offset 0"); });
}

struct Criterion {
  const char* id;
  const char* title;
  void (*run)(const SelfcheckOptions&, Recorder&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"C1", "class polynomials are independent of the pivot rule", pivot_independence},
      {"C2", "shrunken-chamber route matches dimension = degree", shrunken_route},
      {"C3", "minimal-length route matches dimension = degree", minimal_length},
      {"C4", "w0 t^mu route matches dimension = degree", longest_coset},
      {"C5", "f is a bijection on straight classes", straight_bijection},
      {"C6", "class polynomials are positive in z with bounded degree", positivity},
      {"C7", "Bruhat and invariant orders agree on straight classes", order_equivalence},
      {"C8", "defect matches n - gcd(n, k) on GL_n", defect_oracle},
      {"C9", "P-alcove criterion matches nonemptiness for basic b", p_alcoves},
      {"C10", "split-b and basic-comparison scanners", scanners},
  };
  return list;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (const auto& c : criteria()) out.push_back(c.id);
  return out;
}

CriterionResult run_criterion(const std::string& id, const SelfcheckOptions& options) {
  for (const auto& c : criteria()) {
    if (id != c.id) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    auto start = std::chrono::steady_clock::now();
    Recorder rec(r);
    try {
      c.run(options, rec);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.failures.push_back(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw InputError("unknown criterion '" + id + "'");
}

std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options, std::vector<std::string> ids) {
  if (ids.empty()) ids = criterion_ids();
  std::vector<CriterionResult> out(ids.size());
  const std::size_t width = std::max(1u, options.jobs);
  for (std::size_t start = 0; start < ids.size(); start += width) {
    std::vector<std::future<CriterionResult>> batch;
    for (std::size_t i = start; i < std::min(ids.size(), start + width); ++i)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, run_criterion,
                                 ids[i], std::cref(options)));
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

}  // namespace alcove
