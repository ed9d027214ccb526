#include "doctest.h"

#include <string>

#include "tuttekit/fixtures.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/json_io.hpp"
#include "tuttekit/tutte.hpp"
#include "tuttekit/zeros.hpp"

using namespace tuttekit;
using nlohmann::json;

namespace {

bool valid(const json& value, const std::string& schema) {
  std::string err;
  bool ok = validate_schema(value, schema_for(schema), &err);
  if (!ok) INFO("schema error: " << err);
  return ok;
}

}  // namespace

TEST_CASE("laurent json round-trip preserves exact rationals") {
  LaurentPoly p = LaurentPoly::var_power(-2, Rational(3)) +
                  LaurentPoly::var_power(1, Rational(-1, 2)) +
                  LaurentPoly::var_power(3, Rational(7));
  json j = laurent_to_json(p);
  CHECK(valid(j, "laurent"));
  CHECK(j.is_array());
  CHECK(j.size() == 3);
  // terms are emitted low exponent first as [exponent, "coeff"]
  CHECK(j[0][0].get<int>() == -2);
  CHECK(j[0][1].get<std::string>() == "3");
  CHECK(j[1][1].get<std::string>() == "-1/2");
  CHECK(laurent_from_json(j) == p);
}

TEST_CASE("laurent json of zero polynomial is an empty array") {
  json j = laurent_to_json(LaurentPoly());
  CHECK(j.is_array());
  CHECK(j.empty());
  CHECK(laurent_from_json(j).is_zero());
}

TEST_CASE("multiaffine json round-trip") {
  // q*v0 + (1/3) v0 v2 - q^-1
  MultiAffinePoly p = MultiAffinePoly::var(0, LaurentPoly::var_power(1)) +
                      (MultiAffinePoly::var(0) * MultiAffinePoly::var(2)).scaled(Rational(1, 3)) +
                      MultiAffinePoly(LaurentPoly::var_power(-1, Rational(-1)));
  json j = multiaffine_to_json(p);
  CHECK(valid(j, "multiaffine"));
  CHECK(j.at("universe").get<std::vector<int>>() == std::vector<int>{0, 2});
  CHECK(multiaffine_from_json(j) == p);
}

TEST_CASE("multiaffine json round-trip on a real solver output") {
  MultiAffinePoly z = graph_z(complete_graph(4));
  json j = multiaffine_to_json(z);
  CHECK(valid(j, "multiaffine"));
  CHECK(multiaffine_from_json(j) == z);
}

TEST_CASE("multiaffine_from_json rejects vars outside the stated universe") {
  json j = {{"universe", {0, 2}},
            {"terms", {{{"vars", {1}}, {"coeff", {{0, "1"}}}}}}};
  CHECK_THROWS_AS(multiaffine_from_json(j), std::invalid_argument);
}

TEST_CASE("sparse json shape") {
  SparsePoly p = SparsePoly::var(kVarQ) * SparsePoly::var(kVarQ) +
                 SparsePoly::var(7).scaled(Rational(-2, 3));
  json j = sparse_to_json(p);
  CHECK(valid(j, "sparse"));
  REQUIRE(j.at("terms").size() == 2);
  bool saw_q2 = false, saw_v7 = false;
  for (auto& term : j.at("terms")) {
    if (term.at("coeff") == "-2/3") {
      saw_v7 = true;
      CHECK(term.at("vars") == json::array({{7, 1}}));
    }
    if (term.at("coeff") == "1") {
      saw_q2 = true;
      CHECK(term.at("vars") == json::array({{kVarQ, 2}}));
    }
  }
  CHECK(saw_q2);
  CHECK(saw_v7);
}

TEST_CASE("graph json carries exact and symbolic weights") {
  ParsedGraph pg = parse_graph_text(
      "vertices 3\n"
      "edge 0 1 -1/2\n"
      "edge 1 2 a\n"
      "edge 2 0\n");
  json j = graph_to_json(pg.graph);
  CHECK(valid(j, "graph"));
  CHECK(j.at("vertices").get<int>() == 3);
  REQUIRE(j.at("edges").size() == 3);
  CHECK(j.at("edges")[0].at("weight").at("kind") == "exact");
  CHECK(j.at("edges")[0].at("weight").at("value") == "-1/2");
  CHECK(j.at("edges")[1].at("weight").at("kind") == "symbolic");
  CHECK(j.at("edges")[1].at("weight").at("name") == "a");
  // unnamed symbolic edges default to their edge-variable name
  CHECK(j.at("edges")[2].at("weight").at("name") == "v2");
  CHECK(j.at("edges")[2].at("u").get<int>() == 2);
  CHECK(j.at("edges")[2].at("v").get<int>() == 0);
}

TEST_CASE("report json round-trips verdict names and validates") {
  PropertyReport rep;
  rep.property = "demo";
  rep.verdict = Verdict::ProvenExact;
  rep.samples = 42;
  rep.seed = 7;
  rep.witness = "";
  rep.detail = "all coefficients checked";
  json j = report_to_json(rep);
  CHECK(valid(j, "report"));
  CHECK(j.at("verdict") == "proven-exact");
  CHECK(j.at("samples").get<long>() == 42);

  SUBCASE("a bogus verdict fails enum validation with a path") {
    j["verdict"] = "bogus";
    std::string err;
    CHECK_FALSE(validate_schema(j, schema_for("report"), &err));
    CHECK(err.find(".verdict") != std::string::npos);
    CHECK(err.find("value not in enum") != std::string::npos);
  }
  SUBCASE("a missing key fails required validation") {
    j.erase("witness");
    std::string err;
    CHECK_FALSE(validate_schema(j, schema_for("report"), &err));
    CHECK(err.find("missing required key witness") != std::string::npos);
  }
  SUBCASE("an extra key is rejected") {
    j["extra"] = 1;
    std::string err;
    CHECK_FALSE(validate_schema(j, schema_for("report"), &err));
    CHECK(err.find("unexpected key extra") != std::string::npos);
  }
  SUBCASE("a type mismatch names both types") {
    j["samples"] = "many";
    std::string err;
    CHECK_FALSE(validate_schema(j, schema_for("report"), &err));
    CHECK(err.find("expected integer, got string") != std::string::npos);
  }
}

TEST_CASE("rootset json matches its schema and carries multiplicities") {
  RootSet rs = complex_roots(std::vector<Rational>{Rational(2), Rational(-3), Rational(1)});
  json j = rootset_to_json(rs);
  CHECK(valid(j, "rootset"));
  CHECK(j.at("degree").get<int>() == 2);
  REQUIRE(j.at("roots").size() == 2);
  for (auto& r : j.at("roots")) {
    CHECK(r.at("multiplicity").get<int>() == 1);
    CHECK(r.at("im").get<double>() == 0.0);
  }
}

TEST_CASE("validate_schema reports array item paths") {
  json schema = {{"type", "array"}, {"items", {{"type", "integer"}}}};
  std::string err;
  CHECK(validate_schema(json::array({1, 2, 3}), schema, &err));
  CHECK_FALSE(validate_schema(json::array({1, "x", 3}), schema, &err));
  CHECK(err.find("[1]") != std::string::npos);
}

TEST_CASE("validate_schema roots errors at $ for top-level failures") {
  std::string err;
  CHECK_FALSE(validate_schema(json("hello"), schema_for("report"), &err));
  CHECK(err.substr(0, 2) == "$:");
}

TEST_CASE("schema registry") {
  auto names = schema_names();
  CHECK(names == std::vector<std::string>{"laurent", "multiaffine", "sparse", "graph", "report",
                                          "rootset"});
  for (auto& n : names) CHECK(schema_for(n).is_object() || schema_for(n).is_array());
  CHECK_THROWS_AS(schema_for("nope"), std::invalid_argument);
}
