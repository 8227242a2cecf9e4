#pragma once

// JSON/CSV serialization, the class-polynomial cache file, explicit datum
// files and the class_spec grammar.
//
// Cache file: one JSON object per line,
//   {"datum_hash": "...", "element_key": "t[..].u[..]",
//    "decomposition": {"<class id>": [[power, coeff], ...]}, "engine_version": "1"}
// Coefficients are JSON integers when they fit in 64 bits, decimal strings
// otherwise.

#include <iosfwd>
#include <set>
#include <string>

#include <json.hpp>

#include "alcove/workspace.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

// -- datum input -----------------------------------------------------------------
/// {"version": 1, "rank": r, "roots": [[..]], "coroots": [[..]], "simple": [..],
///  "lattice_basis": [[..]] (optional)}
RootDatum datum_from_json(const Json& j, const std::string& name = "custom");
RootDatum datum_from_file(const std::string& path);

// -- class_spec --------------------------------------------------------------------
/// "kappa=[..] nu=[p/q,..]", "of <element key>", "basic" or "basic kappa=[..]".
SigmaClass parse_class_spec(const Workspace& ws, const std::string& text);

// -- JSON values ---------------------------------------------------------------------
Json coeff_json(const BigInt& c);
BigInt coeff_from_json(const Json& j);
Json poly_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
Json dim_json(const Dim& d);
Json invariant_json(const ClassInvariant& i);

Json class_json(const Workspace& ws, const ConjClass& c);
Json decomposition_json(const Workspace& ws, const ClassDecomposition& d);
Json report_json(const Workspace& ws, const ADLVReport& r);
Json split_b_json(const Workspace& ws, const SplitBRecord& r);
Json ghkr_json(const Workspace& ws, const GhkrTable& t);

// -- CSV ---------------------------------------------------------------------------
std::string csv_escape(const std::string& s);
/// Header and rows: id,len_O,kappa,nu,straight
std::string classes_csv(const Workspace& ws, const std::vector<ClassPtr>& classes);
/// One row per kept term: w,kappa,nu,nonempty,dim,class_id,len_O,deg_f,f,value,agreement
std::string report_csv(const Workspace& ws, const std::vector<ADLVReport>& reports);
/// One row per class: element,class_id,len_O,f,z_expansion
std::string decomposition_csv(const Workspace& ws, const ClassDecomposition& d);
std::string ghkr_csv(const Workspace& ws, const GhkrTable& t);

// -- cache -------------------------------------------------------------------------
struct CacheLoad {
  std::size_t loaded = 0;
  std::size_t skipped = 0;  // other datum or engine version
  std::set<AffElt> keys;    // fingerprints present in the file
};
/// Replays a cache stream into the engine. Malformed lines raise InputError,
/// conflicting values IntegrityError.
CacheLoad load_cache(std::istream& in, const Workspace& ws);
/// Appends every memo entry whose fingerprint is not in `already`; returns
/// the number of lines written.
std::size_t append_cache(std::ostream& out, const Workspace& ws, const std::set<AffElt>& already);

}  // namespace alcove
