// Fans: construction, star subdivision, walls, validation.
#include <doctest.h>

#include <algorithm>

#include "torivan/fan.hpp"

using namespace torivan;

namespace {

/** Complete smooth fan of the projective plane, handy for small negatives. */
Fan plane_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}};
  f.max_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{0, 2}}};
  f.complete = true;
  f.smooth = true;
  return f;
}

}  // namespace

TEST_CASE("pairing is the standard dot product") {
  CHECK(pairing({Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}) == 32);
  CHECK_THROWS_AS(pairing({Int(1)}, {Int(1), Int(2)}), DimensionMismatch);
}

TEST_CASE("projective fan of dimension 3") {
  Fan f = make_projective_fan(3);
  CHECK(f.dim == 3);
  CHECK(f.rays.size() == 4);
  CHECK(f.max_cones.size() == 4);
  CHECK(f.labels.at(0) == "e0");
  CHECK(f.labels.at(3) == "e3");
  CHECK(f.rays[0] == LatticeVector{Int(-1), Int(-1), Int(-1)});
  FanValidation v = validate_fan(f);
  CHECK(v.ok());
  CHECK(walls(f).size() == 6);
  CHECK_THROWS_AS(make_projective_fan(2), FanError);
}

TEST_CASE("blow-up fans across the family") {
  Fan f1 = make_blowup_fan(3, 1);
  CHECK(f1.rays.size() == 5);
  CHECK(f1.max_cones.size() == 6);
  CHECK(f1.labels.at(0) == "u0");
  CHECK(f1.labels.at(1) == "e0");
  CHECK(f1.rays[0] == LatticeVector{Int(1), Int(1), Int(1)});
  CHECK(validate_fan(f1).ok());

  Fan f2 = make_blowup_fan(3, 2);
  CHECK(f2.rays.size() == 6);
  CHECK(f2.max_cones.size() == 8);
  CHECK(f2.rays[1] == LatticeVector{Int(-1), Int(0), Int(0)});  // u1 = -e1
  CHECK(validate_fan(f2).ok());

  Fan f4 = make_blowup_fan(3, 4);
  CHECK(f4.rays.size() == 8);
  CHECK(f4.max_cones.size() == 12);
  CHECK(validate_fan(f4).ok());

  CHECK(validate_fan(make_blowup_fan(4, 5)).ok());
  CHECK_THROWS_AS(make_blowup_fan(3, 0), FanError);
  CHECK_THROWS_AS(make_blowup_fan(3, 5), FanError);
}

TEST_CASE("wall census of the blown-up fans") {
  CHECK(walls(make_blowup_fan(3, 1)).size() == 9);
  CHECK(walls(make_blowup_fan(3, 4)).size() == 18);
}

TEST_CASE("walls carry the two incident cones and their shared rays") {
  Fan f = plane_fan();
  auto ws = walls(f);
  REQUIRE(ws.size() == 3);
  for (const auto& w : ws) {
    CHECK(w.left < w.right);
    CHECK(w.shared_rays.size() == 1);
  }
  Fan open = plane_fan();
  open.max_cones.pop_back();
  CHECK_THROWS_AS(walls(open), FanError);
}

TEST_CASE("star subdivision of a maximal cone") {
  Fan p3 = make_projective_fan(3);
  Fan sub = star_subdivide(p3, Cone{{1, 2, 3}});
  CHECK(sub.rays.size() == 5);
  CHECK(sub.max_cones.size() == 6);
  CHECK(sub.rays[4] == LatticeVector{Int(1), Int(1), Int(1)});
  CHECK(sub.labels.at(4) == "u0");
  CHECK(validate_fan(sub).ok());

  // Subdividing two cones reproduces the two-point blow-up's rays.
  Fan sub2 = star_subdivide(sub, Cone{{0, 2, 3}});
  CHECK(sub2.rays.size() == 6);
  CHECK(sub2.labels.at(5) == "u1");
  CHECK(validate_fan(sub2).ok());
  Fan direct = make_blowup_fan(3, 2);
  auto sorted_rays = [](const Fan& f) {
    auto r = f.rays;
    std::sort(r.begin(), r.end());
    return r;
  };
  CHECK(sorted_rays(sub2) == sorted_rays(direct));

  CHECK_THROWS_AS(star_subdivide(p3, Cone{{0, 1}}), FanError);      // not maximal
  CHECK_THROWS_AS(star_subdivide(sub, Cone{{1, 2, 3}}), FanError);  // already subdivided
}

TEST_CASE("validation flags specific defects") {
  SUBCASE("valid plane fan") {
    FanValidation v = validate_fan(plane_fan());
    CHECK(v.ok());
    CHECK(v.complete);
    CHECK(v.smooth);
  }
  SUBCASE("imprimitive ray") {
    Fan f = plane_fan();
    f.rays[1] = {Int(0), Int(2)};
    FanValidation v = validate_fan(f);
    CHECK(v.well_formed);
    CHECK_FALSE(v.rays_primitive);
    CHECK_FALSE(v.ok());
  }
  SUBCASE("overlapping cones fail the common-face test") {
    Fan f;
    f.dim = 2;
    f.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}};
    f.max_cones = {Cone{{0, 1}}, Cone{{1, 2}}};  // second sits inside the first
    FanValidation v = validate_fan(f);
    CHECK(v.well_formed);
    CHECK_FALSE(v.faces_ok);
  }
  SUBCASE("incomplete fan") {
    Fan f = plane_fan();
    f.max_cones.pop_back();
    FanValidation v = validate_fan(f);
    CHECK(v.well_formed);
    CHECK_FALSE(v.complete);
  }
  SUBCASE("non-smooth cone") {
    Fan f;
    f.dim = 2;
    f.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-2)}};
    f.max_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{0, 2}}};
    FanValidation v = validate_fan(f);
    CHECK(v.well_formed);
    CHECK(v.simplicial);
    CHECK_FALSE(v.smooth);
    REQUIRE(v.cone_smooth.size() == 3);
    CHECK(v.cone_smooth[0]);
    CHECK(v.cone_smooth[1]);  // |det((0,1),(-1,-2))| = 1
    CHECK_FALSE(v.cone_smooth[2]);  // |det((1,0),(-1,-2))| = 2
    CHECK(v.complete);
  }
  SUBCASE("unsorted cone is not well-formed") {
    Fan f = plane_fan();
    f.max_cones[0] = Cone{{1, 0}};
    CHECK_FALSE(validate_fan(f).well_formed);
  }
  SUBCASE("duplicate ray is flagged") {
    Fan f = plane_fan();
    f.rays.push_back({Int(1), Int(0)});
    f.max_cones.push_back(Cone{{3}});  // keep the ray referenced
    FanValidation v = validate_fan(f);
    CHECK_FALSE(v.rays_primitive);
  }
}

TEST_CASE("cone membership and subset tests") {
  Fan f = make_blowup_fan(3, 1);
  // tau_{01} = Cone(u0, e2, e3) contains u0 + e2 but not -u0.
  const Cone& tau = f.max_cones[0];
  CHECK(cone_contains(f, tau, {Int(1), Int(2), Int(2)}));
  CHECK_FALSE(cone_contains(f, tau, {Int(-1), Int(-1), Int(-1)}));
  CHECK(cone_subset(f, Cone{{0}}, f, tau));
  Fan p3 = make_projective_fan(3);
  // u0 = (1,1,1) lies in the coarse cone sigma_0 = Cone(e1,e2,e3).
  CHECK(cone_contains(p3, p3.max_cones[0], {Int(1), Int(1), Int(1)}));
  CHECK(cone_subset(f, f.max_cones[0], p3, p3.max_cones[0]));
  CHECK_FALSE(cone_subset(f, f.max_cones[0], p3, p3.max_cones[1]));
}

TEST_CASE("ray and cone lookup") {
  Fan f = make_blowup_fan(3, 1);
  CHECK(f.find_ray({Int(1), Int(1), Int(1)}) == 0);
  CHECK(f.find_ray({Int(7), Int(7), Int(7)}) == -1);
  CHECK(f.find_max_cone({0, 3, 4}) == 0);
  CHECK_FALSE(f.find_max_cone({0, 1, 2}).has_value());
  CHECK(f.find_max_cone_by_gens({{Int(1), Int(1), Int(1)},
                                 {Int(0), Int(1), Int(0)},
                                 {Int(0), Int(0), Int(1)}}) == 0);
}
