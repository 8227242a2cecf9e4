#include <doctest.h>

#include <sstream>

#include "alcove/io.hpp"

using namespace alcove;

TEST_CASE("coefficients and polynomials round-trip through JSON") {
  BigInt huge = BigInt(1) << 100;
  CHECK(coeff_json(BigInt(-7)) == Json(-7));
  CHECK(coeff_json(huge).is_string());
  CHECK(coeff_from_json(coeff_json(huge)) == huge);
  CHECK(coeff_from_json(coeff_json(-huge)) == -huge);

  LaurentPoly p = LaurentPoly::z_power(3) + LaurentPoly::monomial(5, huge);
  CHECK(poly_from_json(poly_json(p)) == p);
  CHECK(poly_json(LaurentPoly::z()) == Json::parse("[[-1,-1],[1,1]]"));
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1]]")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1,\"x\"]]")), InputError);
}

TEST_CASE("dimension encoding") {
  CHECK(dim_json(std::nullopt) == Json("-inf"));
  CHECK(dim_json(Rational(2)) == Json(2));
  CHECK(dim_json(Rational(3, 2)) == Json("3/2"));
}

TEST_CASE("datum files") {
  Json j = Json::parse(R"({"version": 1, "rank": 1, "roots": [[2], [-2]], "coroots": [[1], [-1]], "simple": [0]})");
  RootDatum d = datum_from_json(j);
  CHECK(d.weyl_order() == 2);
  CHECK(d.pi1_moduli().empty());

  Json no_version = j;
  no_version.erase("version");
  CHECK_THROWS_AS(datum_from_json(no_version), InputError);
  Json bad_rank = j;
  bad_rank["rank"] = 0;
  CHECK_THROWS_AS(datum_from_json(bad_rank), InputError);
  CHECK_THROWS_AS(datum_from_file("/nonexistent/datum.json"), InputError);
}

TEST_CASE("class specs") {
  auto ws = Workspace::preset("PGL2");
  SigmaClass b = parse_class_spec(*ws, "basic kappa=[1]");
  CHECK(b.basic);
  CHECK(b.invariant.kappa == IntVec{1});
  CHECK(b.defect == 1);

  SigmaClass c = parse_class_spec(*ws, "kappa=[0] nu=[2]");
  CHECK(c.invariant.newton == RatVec{Rational(2)});
  CHECK_FALSE(c.basic);

  SigmaClass o = parse_class_spec(*ws, "of s0 s1");
  CHECK(o.invariant == c.invariant);

  CHECK(ws->classes().are_conjugate(parse_class_spec(*ws, "kappa=[1] nu=[1]").straight_class->rep,
                                    ws->affine().translation(IntVec{1})));
  CHECK(parse_class_spec(*ws, "basic").invariant.kappa == IntVec{0});
  CHECK_THROWS_AS(parse_class_spec(*ws, "kappa=[0,1]"), InputError);
  CHECK_THROWS_AS(parse_class_spec(*ws, "colour=[1]"), InputError);
  CHECK_THROWS_AS(parse_class_spec(*ws, "kappa=[0] nu=[1]"), InputError);
  CHECK_THROWS_AS(parse_class_spec(*ws, "nu=[1/3]"), InputError);
  CHECK_THROWS_AS(parse_class_spec(*ws, "kappa=[1"), InputError);
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("decomposition JSON lists each class with its polynomial") {
  auto ws = Workspace::preset("PGL2");
  auto d = ws->cocenter().class_polynomials(ws->affine().parse_key("s0 s1 s0"));
  Json j = decomposition_json(*ws, d);
  CHECK(j["element_key"] == "t[4].u[1]");
  CHECK(j["length"] == 3);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["class_id"] == ws->datum().hash_hex() + ":t[-2].u[]");
  CHECK(j["terms"][0]["f_text"] == "v - v^-1");
  CHECK(j["terms"][1]["class_id"] == ws->datum().hash_hex() + ":t[0].u[1]");
  CHECK(j["terms"][1]["f_text"] == "1");
}

TEST_CASE("cache replay") {
  auto cold = Workspace::preset("SL3");
  for (const auto& w : cold->elements_up_to(5, 0)) cold->cocenter().class_polynomials(w);
  std::stringstream file;
  std::size_t written = append_cache(file, *cold, {});
  CHECK(written == cold->cocenter().memo_size());

  auto warm = Workspace::preset("SL3");
  std::stringstream in(file.str());
  CacheLoad load = load_cache(in, *warm);
  CHECK(load.loaded == written);
  CHECK(load.skipped == 0);
  CHECK(warm->cocenter().memo_entries() == cold->cocenter().memo_entries());

  // Appending again with the loaded keys writes nothing new.
  std::stringstream again;
  CHECK(append_cache(again, *warm, load.keys) == 0);

  // Other data are skipped, not merged.
  auto other = Workspace::preset("C2");
  std::stringstream in2(file.str());
  CacheLoad skipped = load_cache(in2, *other);
  CHECK(skipped.loaded == 0);
  CHECK(skipped.skipped == written);
  CHECK(other->cocenter().memo_size() == 0);
}

TEST_CASE("cache conflicts and malformed lines") {
  auto ws = Workspace::preset("SL2");
  ws->cocenter().class_polynomials(ws->affine().parse_key("s1 s0 s1"));
  std::stringstream file;
  append_cache(file, *ws, {});
  std::string line;
  std::string tampered;
  while (std::getline(file, line)) {
    Json j = Json::parse(line);
    for (auto& poly : j["decomposition"]) poly = Json::parse("[[0,5]]");
    tampered += j.dump() + "\n";
  }
  auto fresh = Workspace::preset("SL2");
  fresh->cocenter().class_polynomials(fresh->affine().parse_key("s1 s0 s1"));
  std::stringstream bad(tampered);
  CHECK_THROWS_AS(load_cache(bad, *fresh), IntegrityError);

  std::stringstream garbage("{not json\n");
  CHECK_THROWS_AS(load_cache(garbage, *fresh), InputError);
}
