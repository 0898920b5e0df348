#include <doctest.h>

#include "ayrep/serialize.hpp"

using namespace ayrep;

TEST_SUITE("serialize") {
  TEST_CASE("tableau JSON lists boxes with values") {
    const Json j = to_json(Tableau::parse(". 1\n2\n"));
    CHECK(j["lambda"] == Json::array({2, 1}));
    CHECK(j["mu"] == Json::array({1, 0}));
    CHECK(j["entries"] == Json::parse("[[1,2,1],[2,1,2]]"));
  }

  TEST_CASE("rationals are p/q strings") {
    const Json j = to_json(build_from_functional(Functional({0, 1, -1}), Permutation::identity(3)));
    CHECK(j["dimension"] == 2);
    CHECK(j["normalization"] == "seminormal");
    const Json& s2 = j["generators"][1];
    CHECK(s2["generator"] == 2);
    CHECK(s2["matrix"] == Json::parse(R"([["-1/2","3/4"],["1/1","1/2"]])"));
    CHECK(to_fraction_string(ratio(-6, 4)) == "-3/2");
    CHECK(parse_rational("6/4") == ratio(3, 2));
  }

  TEST_CASE("cell JSON") {
    const Json j = to_json(descent_cell(Functional({0, 2, -1}), Permutation::identity(3)));
    CHECK(j["members"] == Json::parse(R"(["1,2,3","2,1,3","1,3,2"])"));
    CHECK(j["boundary"] == Json::parse(R"j(["(1,3)"])j"));
  }

  TEST_CASE("DOT export labels up edges with the coefficients") {
    const std::string dot = to_dot(build_from_functional(Functional({0, 1, -1}), Permutation::identity(3)));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("n0 -> n1 [label=\"s2 a=-1/2 b=1\"]") != std::string::npos);
    CHECK(dot.find("\\\\") == std::string::npos);
    const std::string plain = to_dot(descent_cell(Functional({0, 2, -1}), Permutation::identity(3)));
    CHECK(plain.find("[label=\"s1\"]") != std::string::npos);
  }

  TEST_CASE("character JSON") {
    const auto C = conjugacy_classes(CoxeterType::A, 3);
    const Json j = to_json(character(build_seminormal_skew(SkewShape(Partition{2, 1})), C), C);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["class"] == "1,1,1");
    CHECK(j[0]["value"] == "2/1");
    CHECK(j[2]["value"] == "-1/1");
  }
}
