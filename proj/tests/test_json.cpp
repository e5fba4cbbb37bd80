#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/json_io.hpp"

using namespace cuspidal;

TEST_CASE("rationals serialize as exact strings") {
  BinaryForm f(2, {Rational(1), Rational(-3, 7), Rational(0)});
  Json j = to_json(f);
  CHECK(j["degree"] == 2);
  CHECK(j["coeffs"][0] == "1");
  CHECK(j["coeffs"][1] == "-3/7");
  CHECK(j["coeffs"][2] == "0");
  CHECK(binform_from_json(j) == f);
}

TEST_CASE("curve round trip") {
  CurveParameterization c = make_curve(2).parameterization;
  Json j = to_json(c);
  CurveParameterization back = curve_from_json(j);
  CHECK(back.x == c.x);
  CHECK(back.y == c.y);
  CHECK(back.z == c.z);
  // the construct wrapper is accepted too
  Json wrapped = to_json(make_curve(2));
  CurveParameterization from_wrap = curve_from_json(wrapped);
  CHECK(from_wrap.x == c.x);
  CHECK(wrapped["q"]["coeffs"][0] == "1");
  CHECK(wrapped["q"]["coeffs"][1] == "2");
  CHECK(wrapped["q"]["coeffs"][2] == "3");
}

TEST_CASE("marked curve round trip") {
  MarkedCurve mc = forward_step(cubic_seed());
  Json j = to_json(mc);
  MarkedCurve back = marked_from_json(j);
  CHECK(back.k == mc.k);
  CHECK(back.curve.x == mc.curve.x);
  CHECK(back.q_param == mc.q_param);
  CHECK(back.p_param == mc.p_param);
  CHECK(back.r_param == mc.r_param);
  CHECK(back.s_param == mc.s_param);
  CHECK(back.ell == mc.ell);
  CHECK(back.tangent == mc.tangent);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(binform_from_json(Json{{"degree", 2}, {"coeffs", {"1", "2"}}}));
  CHECK_THROWS(curve_from_json(Json::array()));
  CHECK_THROWS(p1_from_json(Json::array({"1"})));
  // floats are not acceptable rationals
  CHECK_THROWS(p1_from_json(Json::array({1.5, 2.5})));
}

TEST_CASE("report and classification schemas") {
  CurveReport r = verify_curve(
      make_curve(1).parameterization,
      {{P1Point::infinity(), {2, 2}}, {P1Point::affine(0), {3}}, {P1Point::affine(1), {2}}});
  Json j = to_json(r);
  CHECK(j["degree"] == 5);
  CHECK(j["genus_saturated"] == true);
  CHECK(j["injective"] == true);
  CHECK(j["passes"] == true);
  REQUIRE(j["cusps"].size() == 3);
  CHECK(j["cusps"][0]["param"] == Json::array({"0", "1"}));
  CHECK(j["cusps"][0]["sequence"] == Json::array({2, 2}));
  CHECK(j["cusps"][0]["delta"] == 2);

  auto results = classify(9, 9);
  bool found = false;
  for (const auto& [cand, rep] : results) {
    Json cj = to_json(cand, rep);
    CHECK(cj["chi"].is_string());
    if (cj["verdict"] == "survivor") {
      found = true;
      CHECK(cj["chi"] == "0");
      CHECK(cj["reasons"].empty());
    }
  }
  CHECK(found);
}

TEST_CASE("serialization is deterministic") {
  Json a = to_json(forward_step(cubic_seed()));
  Json b = to_json(forward_step(cubic_seed()));
  CHECK(dump_json(a) == dump_json(b));
  CHECK(dump_json(a).back() == '\n');
}
