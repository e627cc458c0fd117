#include <doctest.h>

#include "support.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/io.hpp"

using namespace zinbiel;

TEST_CASE("algebra JSON round trip") {
  const FamilySpec specs[] = {zt::family_spec(Family::z34, 1, 2),
                              zt::family_spec(Family::z39, 2, 1),
                              zt::family_spec(Family::NF3, 6, 4)};
  for (const auto& spec : specs) {
    SuperAlgebra alg = build(spec);
    SuperAlgebra back = algebra_from_json_string(algebra_to_json_string(alg));
    CHECK(back == alg);
    // serialization of the reparse is byte-identical
    CHECK(algebra_to_json_string(back) == algebra_to_json_string(alg));
  }
}

TEST_CASE("serialization order and content") {
  SuperAlgebra alg = build(zt::family_spec(Family::z34, 1, 2));
  auto j = algebra_to_json(alg);
  CHECK(j["dim_even"] == 1);
  CHECK(j["dim_odd"] == 2);
  REQUIRE(j["products"].size() == 2);
  CHECK(j["products"][0]["left"] == "f1");
  CHECK(j["products"][0]["right"] == "f2");
  CHECK(j["products"][0]["result"]["e1"] == "1");
  CHECK(j["products"][1]["left"] == "f2");
  CHECK(j["products"][1]["result"]["e1"] == "-1");
}

TEST_CASE("malformed algebra JSON is rejected") {
  CHECK_THROWS_AS(algebra_from_json_string("{"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json_string("{\"dim_even\": 1}"), std::invalid_argument);
  // zero denominator
  CHECK_THROWS_AS(algebra_from_json_string(
                      R"({"dim_even":1,"dim_odd":1,"products":[
                          {"left":"f1","right":"f1","result":{"e1":"1/0"}}]})"),
                  std::invalid_argument);
  // grading violation: odd*odd must land in the even part
  CHECK_THROWS_AS(algebra_from_json_string(
                      R"({"dim_even":1,"dim_odd":1,"products":[
                          {"left":"f1","right":"f1","result":{"f1":"1"}}]})"),
                  std::invalid_argument);
  // label outside the declared dimensions
  CHECK_THROWS_AS(algebra_from_json_string(
                      R"({"dim_even":1,"dim_odd":1,"products":[
                          {"left":"e2","right":"f1","result":{"f1":"1"}}]})"),
                  std::invalid_argument);
}

TEST_CASE("element expressions") {
  SuperElement x = parse_element("e1+1/2e3", 3, 0);
  CHECK(x.even()[0] == Rational(1));
  CHECK(x.even()[2] == Rational(1, 2));
  CHECK(element_to_string(x) == "e1+1/2e3");

  CHECK(element_to_string(parse_element("-f2", 1, 2)) == "-f2");
  CHECK(element_to_string(parse_element("2/3 f1 - e1", 1, 2)) == "-e1+2/3f1");
  CHECK(element_to_string(parse_element("e1 - e1", 1, 0)) == "0");
  CHECK(element_to_string(parse_element("3*e2", 2, 0)) == "3e2");

  CHECK_THROWS_AS(parse_element("", 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("1/2", 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("g1", 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("e3", 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("e1 e2", 2, 0), std::invalid_argument);
}

TEST_CASE("graded map JSON round trip") {
  zt::SplitMix64 rng(41);
  GradedLinearMap p = zt::random_graded_map(rng, 2, 3);
  GradedLinearMap back = map_from_json(map_to_json(p));
  CHECK(back.even_block() == p.even_block());
  CHECK(back.odd_block() == p.odd_block());
  CHECK_THROWS_AS(map_from_json(nlohmann::json::parse(R"({"even": [["1"]]})")),
                  std::invalid_argument);
  // singular block
  CHECK_THROWS_AS(
      map_from_json(nlohmann::json::parse(R"({"even": [["0"]], "odd": [["1"]]})")),
      std::invalid_argument);
}
