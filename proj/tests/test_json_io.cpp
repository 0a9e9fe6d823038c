// JSON interchange: integers, fans, divisors, parameters, reports, sweeps.
#include <doctest.h>

#include "torivan/json_io.hpp"

using namespace torivan;

TEST_CASE("integers ride as numbers up to 53 bits, strings beyond") {
  CHECK(int_to_json(Int(0)).is_number());
  CHECK(int_to_json(Int(-123456)).is_number());
  const Int safe = (Int(1) << 53) - 1;
  CHECK(int_to_json(safe).is_number());
  CHECK(int_to_json(safe + 1).is_string());
  CHECK(int_to_json(-(safe + 1)).is_string());
  const std::vector<Int> samples{Int(0), Int(42), Int(-7), safe, Int(safe + 1),
                                 Int(-(safe + 2)), Int("123456789012345678901234567890")};
  for (const Int& v : samples) CHECK(int_from_json(int_to_json(v)) == v);
  CHECK_THROWS_AS(int_from_json(Json("not a number")), std::invalid_argument);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("fan round-trip preserves geometry and relabels validity") {
  Fan f = make_blowup_fan(3, 2);
  Json j = fan_to_json(f);
  FanValidation v;
  Fan back = fan_from_json(j, &v);
  CHECK(v.ok());
  CHECK(back.dim == f.dim);
  CHECK(back.rays == f.rays);
  REQUIRE(back.max_cones.size() == f.max_cones.size());
  for (std::size_t c = 0; c < f.max_cones.size(); ++c)
    CHECK(back.max_cones[c].rays == f.max_cones[c].rays);
  CHECK(back.labels == f.labels);
  CHECK(back.complete);
  CHECK(back.smooth);
}

TEST_CASE("fan parsing rejects broken documents") {
  Json good = fan_to_json(make_projective_fan(3));
  SUBCASE("missing member") {
    Json j = good;
    j.erase("rays");
    CHECK_THROWS_AS(fan_from_json(j), std::invalid_argument);
  }
  SUBCASE("ray index out of range") {
    Json j = good;
    j["max_cones"][0] = {1, 2, 9};
    CHECK_THROWS_AS(fan_from_json(j), std::invalid_argument);
  }
  SUBCASE("unsorted cone") {
    Json j = good;
    j["max_cones"][0] = {3, 2, 1};
    CHECK_THROWS_AS(fan_from_json(j), std::invalid_argument);
  }
  SUBCASE("duplicate cone") {
    Json j = good;
    j["max_cones"][1] = j["max_cones"][0];
    CHECK_THROWS_AS(fan_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("a valid but singular fan loads with its flags down") {
  Json j;
  j["dim"] = 2;
  j["rays"] = {{1, 0}, {0, 1}, {-1, -2}};
  j["max_cones"] = {{0, 1}, {1, 2}, {0, 2}};
  j["labels"] = Json::object();
  FanValidation v;
  Fan f = fan_from_json(j, &v);
  CHECK(v.well_formed);
  CHECK_FALSE(v.smooth);
  CHECK(f.complete);
  CHECK_FALSE(f.smooth);
}

TEST_CASE("divisor round-trip") {
  Fan f = make_blowup_fan(3, 1);
  ToricDivisor d;
  d.set_coeff(0, -2);
  d.set_coeff(2, 7);
  Json j = divisor_to_json(f, d);
  auto [back_fan, back_d] = divisor_from_json(j);
  CHECK(back_fan.rays == f.rays);
  CHECK(back_d == d);

  SUBCASE("unknown ray index") {
    Json bad = j;
    bad["coeffs"]["99"] = 1;
    CHECK_THROWS_AS(divisor_from_json(bad), std::invalid_argument);
  }
  SUBCASE("fan by reference is refused with advice") {
    Json bad = j;
    bad["fan"] = "fans/blowup.json";
    CHECK_THROWS_WITH_AS(divisor_from_json(bad),
                         doctest::Contains("resolve"), std::invalid_argument);
  }
}

TEST_CASE("parameter round-trip") {
  BlowupParams p{4, 3, {Int(1), Int(-2), Int(5)}, Int(-3)};
  BlowupParams back = params_from_json(params_to_json(p));
  CHECK(back.n == p.n);
  CHECK(back.points == p.points);
  CHECK(back.a == p.a);
  CHECK(back.b == p.b);
}

TEST_CASE("report round-trip") {
  Fan f = make_blowup_fan(3, 1);
  ToricDivisor d = divisor_from_params(f, BlowupParams{3, 1, {Int(2)}, Int(0)});
  CohomologyReport r = total_cohomology(f, d);
  Json j = report_to_json(f, r);
  auto [back_fan, back] = report_from_json(j);
  CHECK(back_fan.rays == f.rays);
  CHECK(back.divisor == r.divisor);
  CHECK(back.box.lo == r.box.lo);
  CHECK(back.box.hi == r.box.hi);
  CHECK(back.dims == r.dims);
  REQUIRE(back.contributions.size() == r.contributions.size());
  for (std::size_t i = 0; i < r.contributions.size(); ++i) {
    CHECK(back.contributions[i].m == r.contributions[i].m);
    CHECK(back.contributions[i].ranks == r.contributions[i].ranks);
  }
}

TEST_CASE("sweep round-trip") {
  SweepGrid g;
  g.n = 3;
  g.points = 1;
  g.a_lo = 1;
  g.a_hi = 3;
  g.b_lo = 0;
  g.b_hi = 1;
  std::vector<VanishingVerdict> rows = verify_sweep(g);
  std::vector<VanishingVerdict> back = sweep_from_json(sweep_to_json(rows));
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].params.a == rows[i].params.a);
    CHECK(back[i].params.b == rows[i].params.b);
    CHECK(back[i].predicate_says_vanishes == rows[i].predicate_says_vanishes);
    CHECK(back[i].oracle_h1 == rows[i].oracle_h1);
    CHECK(back[i].agree == rows[i].agree);
    CHECK(back[i].error == rows[i].error);
  }
}

TEST_CASE("validation verdicts serialize completely") {
  Json j = validation_to_json(validate_fan(make_projective_fan(3)));
  for (const char* key : {"well_formed", "rays_primitive", "simplicial", "smooth",
                          "cone_smooth", "faces_ok", "complete", "first_issue"})
    CHECK(j.contains(key));
  CHECK(j["smooth"] == true);
  CHECK(j["first_issue"] == "");
}
