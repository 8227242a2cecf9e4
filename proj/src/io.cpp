#include "alcove/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace alcove {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  if (trim(body).empty()) return out;
  std::string item;
  std::istringstream is(body);
  while (std::getline(is, item, ',')) out.push_back(trim(item));
  return out;
}

IntVec parse_ints(const std::string& body) {
  IntVec out;
  for (const auto& item : split_list(body)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("malformed integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<IntVec> int_matrix(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw InputError(std::string("datum file: missing array '") + field + "'");
  std::vector<IntVec> out;
  for (const auto& row : j[field]) {
    if (!row.is_array()) throw InputError(std::string("datum file: '") + field + "' must hold integer arrays");
    IntVec v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError(std::string("datum file: non-integer entry in '") + field + "'");
      v.push_back(x.get<Int>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json int_vec_json(const IntVec& v) { return Json(v); }

Json rat_vec_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string z_expansion(const LaurentPoly& p) {
  std::string s;
  for (const auto& [k, c] : p.rebase_in_z()) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (k > 0) s += k == 1 ? "*z" : "*z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

// -- datum input -------------------------------------------------------------------

RootDatum datum_from_json(const Json& j, const std::string& name) {
  if (!j.is_object()) throw InputError("datum file: expected a JSON object");
  if (!j.contains("version") || j["version"] != 1) throw InputError("datum file: unsupported or missing version (expected 1)");
  if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<Int>() <= 0)
    throw InputError("datum file: 'rank' must be a positive integer");
  ExplicitDatum spec;
  spec.rank = j["rank"].get<std::size_t>();
  spec.roots = int_matrix(j, "roots");
  spec.coroots = int_matrix(j, "coroots");
  if (!j.contains("simple") || !j["simple"].is_array()) throw InputError("datum file: missing array 'simple'");
  for (const auto& x : j["simple"]) {
    if (!x.is_number_integer() || x.get<Int>() < 0) throw InputError("datum file: bad simple index");
    spec.simple.push_back(x.get<std::size_t>());
  }
  if (j.contains("lattice_basis")) spec.lattice_basis = int_matrix(j, "lattice_basis");
  return RootDatum::from_explicit(spec, name);
}

RootDatum datum_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open datum file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("datum file '" + path + "': " + e.what());
  }
  return datum_from_json(j, path);
}

// -- class_spec ------------------------------------------------------------------------

SigmaClass parse_class_spec(const Workspace& ws, const std::string& raw) {
  const std::string text = trim(raw);
  const RootDatum& d = ws.datum();
  if (text.rfind("of ", 0) == 0) return ws.adlv().sigma_class_of(ws.affine().parse_key(text.substr(3)));

  bool basic = false;
  std::optional<IntVec> kappa;
  std::optional<RatVec> nu;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '=' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string word = text.substr(start, i - start);
    if (i >= text.size() || text[i] != '=') {
      if (word != "basic") throw InputError("unexpected word '" + word + "' in class spec");
      basic = true;
      continue;
    }
    ++i;
    if (i >= text.size() || text[i] != '[') throw InputError("expected '[' after '" + word + "=' in class spec");
    std::size_t close = text.find(']', i);
    if (close == std::string::npos) throw InputError("unterminated list in class spec");
    std::string body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (word == "kappa") {
      kappa = parse_ints(body);
    } else if (word == "nu") {
      RatVec v;
      for (const auto& item : split_list(body)) v.push_back(Rational::parse(item));
      nu = v;
    } else {
      throw InputError("unknown field '" + word + "' in class spec");
    }
  }
  IntVec k = kappa.value_or(IntVec(d.pi1_moduli().size(), 0));
  if (k.size() != d.pi1_moduli().size())
    throw InputError("kappa needs " + std::to_string(d.pi1_moduli().size()) + " coordinates for " + d.name());
  if (basic && nu) throw InputError("a basic class spec takes no nu");
  if (!nu) return ws.adlv().basic_class(k);
  return ws.adlv().sigma_class_from_invariant({k, *nu});
}

// -- JSON values ---------------------------------------------------------------------------

Json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(c.convert_to<std::int64_t>());
  return Json(c.str());
}

BigInt coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t digits = s.size() > 0 && s[0] == '-' ? 1 : 0;
    if (digits == s.size() || !std::all_of(s.begin() + static_cast<long>(digits), s.end(), ::isdigit))
      throw InputError("malformed coefficient '" + s + "'");
    return BigInt(s);
  }
  throw InputError("coefficient must be an integer or a decimal string");
}

Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [power, c] : p.terms()) out.push_back(Json::array({power, coeff_json(c)}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of [power, coeff] pairs");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw InputError("polynomial term must be [power, coeff]");
    p += LaurentPoly::monomial(t[0].get<int>(), coeff_from_json(t[1]));
  }
  return p;
}

Json dim_json(const Dim& d) {
  if (!d) return "-inf";
  if (d->is_integer()) return d->num();
  return d->str();
}

Json invariant_json(const ClassInvariant& i) { return {{"kappa", int_vec_json(i.kappa)}, {"nu", rat_vec_json(i.newton)}}; }

Json class_json(const Workspace& ws, const ConjClass& c) {
  return {{"id", ws.classes().class_id(c)},
          {"len_O", c.min_length},
          {"kappa", int_vec_json(c.invariant.kappa)},
          {"nu", rat_vec_json(c.invariant.newton)},
          {"straight", c.straight}};
}

Json decomposition_json(const Workspace& ws, const ClassDecomposition& d) {
  const auto& a = ws.affine();
  Json terms = Json::array();
  for (const auto& [rep, p] : d.terms) {
    ClassPtr c = ws.classes().class_of_minimal(rep);
    Json z = Json::array();
    for (const auto& [k, coeff] : p.rebase_in_z()) z.push_back(Json::array({k, coeff_json(coeff)}));
    terms.push_back({{"class_id", ws.classes().class_id(*c)},
                     {"len_O", c->min_length},
                     {"kappa", int_vec_json(c->invariant.kappa)},
                     {"nu", rat_vec_json(c->invariant.newton)},
                     {"f", poly_json(p)},
                     {"f_text", p.str()},
                     {"z", z}});
  }
  return {{"element_key", a.encode(d.source)},
          {"length", a.length(d.source)},
          {"datum_hash", ws.datum().hash_hex()},
          {"terms", terms}};
}

namespace {

Json method_json(const std::optional<MethodResult>& m) {
  if (!m) return nullptr;
  return {{"nonempty", m->nonempty}, {"dim", dim_json(m->dim)}, {"agrees", m->agrees}, {"detail", m->detail}};
}

}  // namespace

Json report_json(const Workspace& ws, const ADLVReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"class_id", ws.classes().class_id(t.rep)},
                     {"len_O", t.len_O},
                     {"deg_f", *t.f.deg()},
                     {"f", poly_json(t.f)},
                     {"value", dim_json(t.value)}});
  Json methods = {{"dim_degree", {{"nonempty", r.nonempty}, {"dim", dim_json(r.dim)}, {"terms", r.terms.size()}}},
                  {"min_length", method_json(r.min_length)},
                  {"shrunken", method_json(r.shrunken)},
                  {"p_alcove", method_json(r.p_alcove)},
                  {"longest_coset", method_json(r.longest_coset)}};
  return {{"w", ws.affine().encode(r.w)},
          {"b", invariant_json(r.b)},
          {"nonempty", r.nonempty},
          {"dim", dim_json(r.dim)},
          {"terms", terms},
          {"methods", methods},
          {"agreement", r.agreement ? Json(*r.agreement) : Json(nullptr)}};
}

Json split_b_json(const Workspace& ws, const SplitBRecord& r) {
  const auto& d = ws.datum();
  Json variants = Json::array();
  for (const auto& v : r.variants)
    variants.push_back({{"assembly", v.assembly},
                        {"chamber", v.chamber},
                        {"w", ws.affine().encode(v.w)},
                        {"chamber_ok", v.chamber_ok},
                        {"formula", dim_json(v.formula)},
                        {"oracle", dim_json(v.oracle)},
                        {"agrees", v.agrees}});
  return {{"x", d.word_string(r.x)},
          {"y", d.word_string(r.y)},
          {"mu", int_vec_json(r.mu)},
          {"lambda", int_vec_json(r.lambda)},
          {"variants", variants},
          {"agreeing_from", r.agreeing_from ? Json(*r.agreeing_from) : Json(nullptr)},
          {"report_only", true}};
}

Json ghkr_json(const Workspace& ws, const GhkrTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"w", ws.affine().encode(row.w)},
                    {"length", row.length},
                    {"dim_b", dim_json(row.dim_b)},
                    {"dim_basic", dim_json(row.dim_basic)},
                    {"predicted", dim_json(row.predicted)},
                    {"agrees", row.agrees}});
  return {{"b", invariant_json(t.b)},
          {"b_basic", invariant_json(t.b_basic)},
          {"offset", dim_json(t.offset)},
          {"convention", "rows where both varieties are empty count as agreement"},
          {"rows", rows},
          {"disagreements", t.disagreements},
          {"agreeing_from", t.agreeing_from},
          {"report_only", true}};
}

// -- CSV ----------------------------------------------------------------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string classes_csv(const Workspace& ws, const std::vector<ClassPtr>& classes) {
  std::string out = "id,len_O,kappa,nu,straight\n";
  for (const auto& c : classes)
    out += csv_escape(ws.classes().class_id(*c)) + "," + std::to_string(c->min_length) + "," +
           csv_escape(format_vec(c->invariant.kappa)) + "," + csv_escape(format_vec(c->invariant.newton)) + "," +
           (c->straight ? "true" : "false") + "\n";
  return out;
}

std::string report_csv(const Workspace& ws, const std::vector<ADLVReport>& reports) {
  std::string out = "w,kappa,nu,nonempty,dim,class_id,len_O,deg_f,f,value,agreement\n";
  for (const auto& r : reports) {
    std::string head = csv_escape(ws.affine().encode(r.w)) + "," + csv_escape(format_vec(r.b.kappa)) + "," +
                       csv_escape(format_vec(r.b.newton)) + "," + (r.nonempty ? "true" : "false") + "," +
                       dim_str(r.dim) + ",";
    std::string tail = std::string(",") + (r.agreement ? (*r.agreement ? "true" : "false") : "") + "\n";
    if (r.terms.empty()) out += head + ",,,," + tail;
    for (const auto& t : r.terms)
      out += head + csv_escape(ws.classes().class_id(t.rep)) + "," + std::to_string(t.len_O) + "," +
             std::to_string(*t.f.deg()) + "," + csv_escape(t.f.str()) + "," + t.value.str() + tail;
  }
  return out;
}

std::string decomposition_csv(const Workspace& ws, const ClassDecomposition& d) {
  std::string out = "element,class_id,len_O,f,z_expansion\n";
  for (const auto& [rep, p] : d.terms)
    out += csv_escape(ws.affine().encode(d.source)) + "," + csv_escape(ws.classes().class_id(rep)) + "," +
           std::to_string(ws.classes().class_of_minimal(rep)->min_length) + "," + csv_escape(p.str()) + "," +
           csv_escape(z_expansion(p)) + "\n";
  return out;
}

std::string ghkr_csv(const Workspace& ws, const GhkrTable& t) {
  std::string out = "w,length,dim_b,dim_basic,predicted,agrees\n";
  for (const auto& row : t.rows)
    out += csv_escape(ws.affine().encode(row.w)) + "," + std::to_string(row.length) + "," + dim_str(row.dim_b) + "," +
           dim_str(row.dim_basic) + "," + dim_str(row.predicted) + "," + (row.agrees ? "true" : "false") + "\n";
  return out;
}

// -- cache ----------------------------------------------------------------------------------

CacheLoad load_cache(std::istream& in, const Workspace& ws) {
  CacheLoad out;
  const std::string hash = ws.datum().hash_hex();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto where = [&] { return "cache line " + std::to_string(lineno) + ": "; };
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where() + e.what());
    }
    if (!j.is_object() || !j.contains("datum_hash") || !j.contains("element_key") || !j.contains("decomposition") ||
        !j.contains("engine_version") || !j["decomposition"].is_object())
      throw InputError(where() + "missing fields");
    if (j["datum_hash"] != hash || j["engine_version"] != kEngineVersion) {
      ++out.skipped;
      continue;
    }
    AffElt element = ws.affine().decode(j["element_key"].get<std::string>());
    ClassTerms terms;
    for (const auto& [id, poly] : j["decomposition"].items()) {
      auto colon = id.find(':');
      if (colon == std::string::npos || id.substr(0, colon) != hash) throw InputError(where() + "bad class id '" + id + "'");
      terms.emplace(ws.affine().decode(id.substr(colon + 1)), poly_from_json(poly));
    }
    ws.cocenter().insert_memo(element, std::move(terms));
    out.keys.insert(ws.cocenter().fingerprint(element));
    ++out.loaded;
  }
  return out;
}

std::size_t append_cache(std::ostream& out, const Workspace& ws, const std::set<AffElt>& already) {
  const std::string hash = ws.datum().hash_hex();
  std::size_t written = 0;
  for (const auto& [fp, terms] : ws.cocenter().memo_entries()) {
    if (already.count(fp)) continue;
    Json dec = Json::object();
    for (const auto& [rep, p] : terms) dec[ws.classes().class_id(rep)] = poly_json(p);
    Json line = {{"datum_hash", hash},
                 {"element_key", ws.affine().encode(fp)},
                 {"decomposition", dec},
                 {"engine_version", kEngineVersion}};
    out << line.dump() << '\n';
    ++written;
  }
  return written;
}

}  // namespace alcove
