// alcove: command-line front end for class polynomials and X_w(b).

#include <cstdio>
#include <fstream>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "alcove/io.hpp"
#include "alcove/selfcheck.hpp"
#include "alcove/svg.hpp"

using namespace alcove;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kResource = 3, kSelfcheck = 4 };

struct Config {
  std::string preset = "SL2";
  std::string datum_file;
  std::optional<std::size_t> max_len;
  Int kappa_window = 0;
  std::optional<std::size_t> nu_bound;
  std::string cache;
  std::string format = "json";
  unsigned jobs = 1;
  std::size_t limit_nodes = EngineLimits{}.max_nodes;
  std::size_t limit_memo = EngineLimits{}.max_memo_entries;
  std::string pivot = "canonical";
  std::string output;
};

std::unique_ptr<Workspace> make_workspace(const Config& c) {
  EngineLimits limits{c.limit_memo, c.limit_nodes};
  PivotRule pivot = PivotRule::parse(c.pivot);
  RootDatum d = c.datum_file.empty() ? RootDatum::preset(c.preset) : datum_from_file(c.datum_file);
  return std::make_unique<Workspace>(std::move(d), pivot, limits);
}

IntVec parse_vector(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  IntVec out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw InputError("malformed vector '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw InputError("malformed vector '" + text + "'");
  }
  return out;
}

WeylElt parse_finite(const Workspace& ws, const std::string& key) {
  AffElt w = ws.affine().parse_key(key);
  if (!is_zero(w.translation)) throw InputError("'" + key + "' is not an element of the finite Weyl group");
  return w.finite;
}

void check_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw InputError("format '" + c.format + "' is not available for this command");
}

class Session {
public:
  explicit Session(const Config& c) : config_(c), ws_(make_workspace(c)) {
    if (!c.cache.empty() && std::filesystem::exists(c.cache)) {
      std::ifstream in(c.cache);
      loaded_ = load_cache(in, *ws_);
    }
  }

  const Workspace& ws() const { return *ws_; }

  void flush_cache() {
    if (config_.cache.empty()) return;
    std::ofstream out(config_.cache, std::ios::app);
    if (!out) throw InputError("cannot write cache file '" + config_.cache + "'");
    append_cache(out, *ws_, loaded_.keys);
  }

  void emit(const std::string& text) const {
    if (config_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(config_.output);
    if (!out) throw InputError("cannot write '" + config_.output + "'");
    out << text;
  }

private:
  const Config& config_;
  std::unique_ptr<Workspace> ws_;
  CacheLoad loaded_;
};

int cmd_classes(const Config& c) {
  check_format(c, {"json", "csv"});
  Session s(c);
  std::vector<ClassPtr> classes = c.nu_bound ? s.ws().classes().straight_classes(*c.nu_bound, c.kappa_window)
                                             : s.ws().classes().enumerate_classes(c.max_len.value_or(4), c.kappa_window);
  if (c.format == "csv") {
    s.emit(classes_csv(s.ws(), classes));
  } else {
    Json rows = Json::array();
    for (const auto& cls : classes) rows.push_back(class_json(s.ws(), *cls));
    s.emit(Json{{"datum", s.ws().datum().name()}, {"datum_hash", s.ws().datum().hash_hex()}, {"classes", rows}}.dump(2) +
           "\n");
  }
  return kOk;
}

int cmd_classpoly(const Config& c, const std::string& key) {
  check_format(c, {"json", "csv"});
  Session s(c);
  auto dec = s.ws().cocenter().class_polynomials(s.ws().affine().parse_key(key));
  s.emit(c.format == "csv" ? decomposition_csv(s.ws(), dec) : decomposition_json(s.ws(), dec).dump(2) + "\n");
  s.flush_cache();
  return kOk;
}

int cmd_adlv(const Config& c, const std::string& key, const std::string& spec) {
  check_format(c, {"json", "csv"});
  Session s(c);
  SigmaClass b = parse_class_spec(s.ws(), spec);
  auto report = s.ws().adlv().full_report(s.ws().affine().parse_key(key), b);
  s.emit(c.format == "csv" ? report_csv(s.ws(), {report}) : report_json(s.ws(), report).dump(2) + "\n");
  s.flush_cache();
  return kOk;
}

int cmd_scan(const Config& c) {
  check_format(c, {"json", "csv"});
  Session s(c);
  const Workspace& ws = s.ws();
  const std::size_t max_len = c.max_len.value_or(4);
  std::vector<SigmaClass> bs;
  for (const auto& cls : ws.classes().straight_classes(c.nu_bound.value_or(max_len), c.kappa_window))
    bs.push_back(ws.adlv().sigma_class_from_invariant(cls->invariant));

  std::vector<std::pair<AffElt, const SigmaClass*>> jobs;
  for (const auto& w : ws.elements_up_to(max_len, c.kappa_window))
    for (const auto& b : bs)
      if (ws.affine().kottwitz(w) == b.invariant.kappa) jobs.emplace_back(w, &b);

  std::vector<ADLVReport> reports(jobs.size());
  std::vector<std::exception_ptr> errors(std::max(1u, c.jobs));
  std::vector<std::thread> pool;
  const unsigned width = std::max(1u, c.jobs);
  for (unsigned t = 0; t < width; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < jobs.size(); i += width) reports[i] = ws.adlv().full_report(jobs[i].first, *jobs[i].second);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (c.format == "csv") {
    s.emit(report_csv(ws, reports));
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(report_json(ws, r));
    s.emit(Json{{"datum", ws.datum().name()}, {"max_len", max_len}, {"rows", rows}}.dump(2) + "\n");
  }
  s.flush_cache();
  return kOk;
}

int cmd_svg(const Config& c, const std::string& spec) {
  Session s(c);
  SvgOptions opts;
  opts.max_len = c.max_len.value_or(8);
  s.emit(render_alcoves_svg(s.ws(), parse_class_spec(s.ws(), spec), opts));
  s.flush_cache();
  return kOk;
}

int cmd_splitb(const Config& c, const std::string& x, const std::string& y, const std::string& mu,
               const std::string& lambda, Int threshold) {
  check_format(c, {"json"});
  Session s(c);
  auto rec = s.ws().adlv().split_b_checker(parse_finite(s.ws(), x), parse_finite(s.ws(), y), parse_vector(mu),
                                           parse_vector(lambda), threshold);
  s.emit(split_b_json(s.ws(), rec).dump(2) + "\n");
  s.flush_cache();
  return kOk;
}

int cmd_ghkr(const Config& c, const std::string& spec, const std::string& basic_spec) {
  check_format(c, {"json", "csv"});
  Session s(c);
  auto table = s.ws().adlv().ghkr_scan(parse_class_spec(s.ws(), spec), parse_class_spec(s.ws(), basic_spec),
                                       c.max_len.value_or(10));
  s.emit(c.format == "csv" ? ghkr_csv(s.ws(), table) : ghkr_json(s.ws(), table).dump(2) + "\n");
  s.flush_cache();
  return kOk;
}

int cmd_selfcheck(const Config& c, const std::vector<std::string>& only) {
  SelfcheckOptions opts;
  opts.max_len = c.max_len.value_or(10);
  opts.jobs = c.jobs;
  bool ok = true;
  for (const auto& r : run_selfcheck(opts, only)) {
    std::printf("%-4s %s  %s (%zu checks, %.1fs)\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.title.c_str(), r.checks,
                r.seconds);
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    ok = ok && r.passed;
  }
  return ok ? kOk : kSelfcheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class polynomials and affine Deligne-Lusztig varieties for split root data"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("-p,--preset", c.preset, "Root datum preset (SL2, PGL3, GL4, C2, G2, E6_sc, ...)");
  app.add_option("--datum", c.datum_file, "Explicit datum JSON file")->check(CLI::ExistingFile);
  app.add_option("--max-len", c.max_len, "Length bound");
  app.add_option("--kappa-window", c.kappa_window, "Range of free Kottwitz coordinates")->check(CLI::NonNegativeNumber);
  app.add_option("--nu-bound", c.nu_bound, "Bound on <nu, 2rho> for straight classes");
  app.add_option("--cache", c.cache, "JSON-lines class-polynomial cache");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--limit-nodes", c.limit_nodes, "Reduction nodes per decomposition")->check(CLI::PositiveNumber);
  app.add_option("--limit-memo", c.limit_memo, "Memo entries")->check(CLI::PositiveNumber);
  app.add_option("--pivot", c.pivot, "canonical, reversed or seeded:N");
  app.add_option("-o,--output", c.output, "Write output to a file");

  std::string key, spec, basic_spec, x, y, mu, lambda;
  Int threshold = 4;
  std::vector<std::string> only;

  auto* classes = app.add_subcommand("classes", "List conjugacy classes");
  auto* classpoly = app.add_subcommand("classpoly", "Class polynomials of an element");
  classpoly->add_option("element", key, "Element key, e.g. \"s0 s1 s0\" or \"t[1,0] s1\"")->required();
  auto* adlv = app.add_subcommand("adlv", "Nonemptiness and dimension of X_w(b)");
  adlv->add_option("element", key, "Element key")->required();
  adlv->add_option("class", spec, "\"kappa=[..] nu=[..]\", \"basic kappa=[..]\" or \"of <element>\"")->required();
  auto* scan = app.add_subcommand("scan", "All (w, b) in the length and Newton bounds");
  auto* svg = app.add_subcommand("svg", "Rank-2 alcove picture for a class");
  svg->add_option("class", spec, "Class spec")->required();
  auto* splitb = app.add_subcommand("splitb", "Report-only check of the split-b dimension formula");
  splitb->add_option("x", x, "Finite Weyl element, e.g. \"s1 s2\" or 1")->required();
  splitb->add_option("y", y, "Finite Weyl element")->required();
  splitb->add_option("mu", mu, "Dominant coweight, e.g. [1,0]")->required();
  splitb->add_option("lambda", lambda, "Dominant regular coroot-lattice vector")->required();
  splitb->add_option("--threshold", threshold, "Largest multiple of lambda to scan");
  auto* ghkr = app.add_subcommand("ghkr", "Report-only comparison of X_w(b) with X_w(b') for basic b'");
  ghkr->add_option("class", spec, "Class spec for b")->required();
  ghkr->add_option("basic", basic_spec, "Class spec for the basic b'")->required();
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance suites");
  selfcheck->add_option("--only", only, "Criteria to run, e.g. C1 C4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*classes) return cmd_classes(c);
    if (*classpoly) return cmd_classpoly(c, key);
    if (*adlv) return cmd_adlv(c, key, spec);
    if (*scan) return cmd_scan(c);
    if (*svg) return cmd_svg(c, spec);
    if (*splitb) return cmd_splitb(c, x, y, mu, lambda, threshold);
    if (*ghkr) return cmd_ghkr(c, spec, basic_spec);
    if (*selfcheck) return cmd_selfcheck(c, only);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
