#include "doctest.h"
#include "ellfgl/fgl.hpp"
#include "ellfgl/io.hpp"
#include "support.hpp"

using namespace ellfgl;
using ellfgl::testing::Gen;
using ellfgl::testing::P;

TEST_CASE("polynomial JSON layout") {
  auto R = make_spec({{"x", -2}, {"y", -4}});
  Json j = to_json(P(R, "3*x^2*y - 5/7"));
  CHECK(j["vars"] == Json({"x", "y"}));
  CHECK(j["weights"] == Json({-2, -4}));
  REQUIRE(j["terms"].size() == 2);
  // grlex: the constant comes first.
  CHECK(j["terms"][0]["exp"] == Json({0, 0}));
  CHECK(j["terms"][0]["num"] == "-5");
  CHECK(j["terms"][0]["den"] == "7");
  CHECK(j["terms"][1]["exp"] == Json({2, 1}));
  CHECK(j["terms"][1]["den"] == "1");
}

TEST_CASE("random polynomials round-trip") {
  Gen gen(41);
  auto R = testing::mu_spec();
  for (int trial = 0; trial < 50; ++trial) {
    MPoly p = gen.poly(R, 6, 3);
    MPoly q = mpoly_from_json(Json::parse(to_json(p).dump()));
    CHECK(q == rebase(q, R));
    CHECK(rebase(q, R) == p);
  }
}

TEST_CASE("random series round-trip") {
  Gen gen(43);
  auto R = testing::mu_spec();
  for (int trial = 0; trial < 20; ++trial) {
    USeries s = gen.series(R, "t", gen.small(0, 9), false, false);
    Json j = to_json(s);
    CHECK(j["kind"] == "useries");
    USeries back = useries_from_json(Json::parse(j.dump()));
    CHECK(back == s);
  }
  USeries zero(R, {"u"}, 5);
  CHECK(useries_from_json(to_json(zero)) == zero);
}

TEST_CASE("bivariate series round-trip") {
  BSeries F = build_general(symbolic_mu(), 6).F;
  Json j = to_json(F);
  CHECK(j["kind"] == "bseries");
  CHECK(j["vars"] == Json({"t1", "t2"}));
  CHECK(bseries_from_json(Json::parse(j.dump())) == F);
  // Identical values serialize to identical text.
  CHECK(j.dump() == to_json(build_general(symbolic_mu(), 6).F).dump());
}

TEST_CASE("malformed JSON is rejected") {
  auto R = make_spec({{"x", -2}});
  Json j = to_json(P(R, "x"));
  j["weights"] = Json::array();
  CHECK_THROWS_AS(mpoly_from_json(j), std::invalid_argument);
  Json s = to_json(USeries(R, {"t"}, 2));
  s["kind"] = "bseries";
  CHECK_THROWS_AS(useries_from_json(s), std::invalid_argument);
  Json big = to_json(variable_series<1>(R, {"t"}, 0, 2));
  big["order"] = 0;
  CHECK_THROWS_AS(useries_from_json(big), std::invalid_argument);
}

TEST_CASE("report JSON") {
  Report r;
  r.add("a", true);
  r.add("b", false, "witness");
  Json j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][1]["detail"] == "witness");
}
