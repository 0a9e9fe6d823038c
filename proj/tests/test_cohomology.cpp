// Cohomology: active sets, nerves, reduced ranks, boxes, dimensions,
// closed forms, predicates, classification and the sweep harness.
#include <doctest.h>

#include <vector>

#include "torivan/cohomology.hpp"
#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"
#include "torivan/positivity.hpp"

using namespace torivan;

namespace {

ToricDivisor family1(const Fan& f, Int a, Int b) {
  return divisor_from_params(f, BlowupParams{3, 1, {std::move(a)}, std::move(b)});
}

ToricDivisor hyperplane_multiple(int d) {
  ToricDivisor out;
  out.set_coeff(1, d);
  return out;
}

long long binom3(long long t) {  // C(t,3), zero for t < 3
  return t >= 3 ? t * (t - 1) * (t - 2) / 6 : 0;
}

}  // namespace

TEST_CASE("active sets pick the rays violating the divisor bound") {
  Fan p3 = make_projective_fan(3);
  ActiveSet s = active_set(p3, hyperplane_multiple(-4), {Int(3), Int(-1), Int(-1)});
  CHECK(s.active_rays == std::vector<int>{0, 1, 2, 3});
  REQUIRE(s.per_cone.size() == 4);
  for (std::size_t c = 0; c < 4; ++c) CHECK(s.per_cone[c].size() == 3);

  Fan f = make_blowup_fan(3, 1);
  ActiveSet t = active_set(f, family1(f, 2, 0), {Int(1), Int(0), Int(0)});
  CHECK(t.active_rays == std::vector<int>{0, 1});  // u0 and e0
}

TEST_CASE("hull intersection tests") {
  LatticeVector e1{Int(1), Int(0), Int(0)}, e2{Int(0), Int(1), Int(0)},
      e3{Int(0), Int(0), Int(1)}, e0{Int(-1), Int(-1), Int(-1)}, u0{Int(1), Int(1), Int(1)};
  CHECK(pieces_intersect({{e1}, {e1, e2}}));
  CHECK_FALSE(pieces_intersect({{e0}, {u0}}));
  CHECK_FALSE(pieces_intersect({{e1, e2}, {e3, u0}}));
  CHECK(pieces_intersect({}));         // no constraint
  CHECK(pieces_intersect({{e1, e2}}));  // single piece
  // Segment crossing a segment: [e1,e2] meets [u0*0 + ...]: take midpoint cases.
  LatticeVector w{Int(1), Int(1), Int(0)};
  CHECK(pieces_intersect({{e1, e2}, {w, e1}}));
}

TEST_CASE("nerve of the boundary of the 3-simplex") {
  Fan p3 = make_projective_fan(3);
  NerveComplex nc = nerve(p3, hyperplane_multiple(-4), {Int(3), Int(-1), Int(-1)});
  REQUIRE(nc.pieces.size() == 4);
  REQUIRE(nc.faces.size() == 3);
  CHECK(nc.faces[0].size() == 4);
  CHECK(nc.faces[1].size() == 6);
  CHECK(nc.faces[2].size() == 4);  // the solid tetrahedron is missing
  ReducedRanks rr = reduced_ranks(nc);
  CHECK(rr.degree_minus1 == 0);
  REQUIRE(rr.ranks.size() >= 3);
  CHECK(rr.ranks[0] == 0);
  CHECK(rr.ranks[1] == 0);
  CHECK(rr.ranks[2] == 1);
}

TEST_CASE("reduced rank conventions on hand-built complexes") {
  SUBCASE("empty cover") {
    NerveComplex c;
    ReducedRanks rr = reduced_ranks(c);
    CHECK(rr.degree_minus1 == 1);
    CHECK_FALSE(rr.all_zero());
  }
  SUBCASE("one contractible piece") {
    NerveComplex c;
    c.pieces = {{0}};
    c.faces = {{{0}}};
    ReducedRanks rr = reduced_ranks(c);
    CHECK(rr.degree_minus1 == 0);
    CHECK(rr.all_zero());
  }
  SUBCASE("two disjoint pieces") {
    NerveComplex c;
    c.pieces = {{0}, {1}};
    c.faces = {{{0}, {1}}};
    ReducedRanks rr = reduced_ranks(c);
    CHECK(rr.degree_minus1 == 0);
    REQUIRE(!rr.ranks.empty());
    CHECK(rr.ranks[0] == 1);
  }
  SUBCASE("a filled triangle is contractible") {
    NerveComplex c;
    c.pieces = {{0}, {1}, {2}};
    c.faces = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
    CHECK(reduced_ranks(c).all_zero());
  }
  SUBCASE("a hollow triangle is a circle") {
    NerveComplex c;
    c.pieces = {{0}, {1}, {2}};
    c.faces = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
    ReducedRanks rr = reduced_ranks(c);
    CHECK(rr.ranks[0] == 0);
    CHECK(rr.ranks[1] == 1);
  }
}

TEST_CASE("search boxes") {
  Fan p3 = make_projective_fan(3);
  SearchBox b = search_box(p3, ToricDivisor{});
  CHECK(b.lo == std::vector<Int>{Int(-1), Int(-1), Int(-1)});
  CHECK(b.hi == std::vector<Int>{Int(1), Int(1), Int(1)});
  CHECK(b.volume() == 27);

  SearchBox wide = search_box(p3, ToricDivisor{}, 2);
  CHECK(wide.lo == std::vector<Int>{Int(-2), Int(-2), Int(-2)});
  CHECK(wide.volume() == 125);

  SearchBox shifted = search_box(p3, hyperplane_multiple(-4));
  CHECK(shifted.lo == std::vector<Int>{Int(-1), Int(-5), Int(-5)});
  CHECK(shifted.hi == std::vector<Int>{Int(5), Int(1), Int(1)});

  Fan degenerate;
  degenerate.dim = 2;
  degenerate.rays = {{Int(1), Int(0)}};
  degenerate.max_cones = {Cone{{0}}};
  CHECK_THROWS_AS(search_box(degenerate, ToricDivisor{}), FanError);
}

TEST_CASE("classical cohomology of line-bundle multiples on projective space") {
  Fan p3 = make_projective_fan(3);
  for (int d = -8; d <= 8; ++d) {
    CAPTURE(d);
    CohomologyReport r = total_cohomology(p3, hyperplane_multiple(d));
    REQUIRE(r.dims.size() == 4);
    CHECK(r.dims[0] == binom3(d + 3));
    CHECK(r.dims[1] == 0);
    CHECK(r.dims[2] == 0);
    CHECK(r.dims[3] == binom3(-d - 1));
  }
  CohomologyReport top = total_cohomology(p3, hyperplane_multiple(-4));
  REQUIRE(top.contributions.size() == 1);
  CHECK(top.contributions[0].m == Character{Int(3), Int(-1), Int(-1)});
  CHECK(top.contributions[0].ranks == std::vector<int>{0, 0, 1});
}

TEST_CASE("first cohomology spots on the one-point blow-up") {
  Fan f = make_blowup_fan(3, 1);
  CohomologyReport r20 = total_cohomology(f, family1(f, 2, 0));
  CHECK(r20.dims == std::vector<long long>{0, 3, 0, 0});
  REQUIRE(r20.contributions.size() == 3);
  CHECK(r20.contributions[0].m == Character{Int(0), Int(0), Int(1)});
  CHECK(r20.contributions[1].m == Character{Int(0), Int(1), Int(0)});
  CHECK(r20.contributions[2].m == Character{Int(1), Int(0), Int(0)});
  for (const auto& c : r20.contributions) CHECK(c.ranks == std::vector<int>{1});

  CohomologyReport r31 = total_cohomology(f, family1(f, 3, 1));
  CHECK(r31.dims == std::vector<long long>{0, 6, 0, 0});

  // Normal-form echo: the report's divisor is the canonical representative
  // relative to the fan's first maximal cone.
  ToricDivisor nf = picard_normal_form(f, f.max_cones[0], family1(f, 2, 0));
  CHECK(r20.divisor == nf);
}

TEST_CASE("sections counted two ways") {
  Fan f = make_blowup_fan(3, 1);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 2}, {0, 0}, {1, 3}}) {
    CAPTURE(a);
    CAPTURE(b);
    ToricDivisor d = family1(f, a, b);
    CohomologyReport r = total_cohomology(f, d);
    // Direct polytope count over the same box.
    SearchBox box = search_box(f, d);
    long long sections = 0;
    std::vector<Int> m(3);
    for (Int x = box.lo[0]; x <= box.hi[0]; ++x)
      for (Int y = box.lo[1]; y <= box.hi[1]; ++y)
        for (Int z = box.lo[2]; z <= box.hi[2]; ++z) {
          m = {x, y, z};
          bool inside = true;
          for (std::size_t rr = 0; rr < f.rays.size() && inside; ++rr)
            inside = pairing(m, f.rays[rr]) >= -d.coeff(static_cast<int>(rr));
          if (inside) ++sections;
        }
    CHECK(r.dims[0] == sections);
  }
}

TEST_CASE("linear equivalence leaves every dimension unchanged") {
  Fan f = make_blowup_fan(3, 2);
  ToricDivisor d =
      divisor_from_params(f, BlowupParams{3, 2, {Int(2), Int(1)}, Int(1)});
  ToricDivisor shifted = d + div_of_character(f, {Int(1), Int(-2), Int(3)});
  CohomologyReport r1 = total_cohomology(f, d);
  CohomologyReport r2 = total_cohomology(f, shifted);
  CHECK(r1.dims == r2.dims);
  CHECK(r1.divisor == r2.divisor);  // same normal-form echo
}

TEST_CASE("margin does not change any dimension") {
  Fan f = make_blowup_fan(3, 2);
  ToricDivisor d =
      divisor_from_params(f, BlowupParams{3, 2, {Int(-1), Int(0)}, Int(-4)});
  CohomologyReport r1 = total_cohomology(f, d, CohomologyOptions{1, 10'000'000});
  CohomologyReport r2 = total_cohomology(f, d, CohomologyOptions{2, 10'000'000});
  CHECK(r1.dims == std::vector<long long>{0, 0, 0, 1});
  CHECK(r1.dims == r2.dims);
}

TEST_CASE("the enumeration cap aborts oversized boxes") {
  Fan f = make_blowup_fan(3, 1);
  CHECK_THROWS_AS(total_cohomology(f, family1(f, 40, 80), CohomologyOptions{1, 100}),
                  EnumerationCapExceeded);
}

TEST_CASE("rank cache is reusable and fan-bound") {
  Fan f = make_blowup_fan(3, 1);
  NerveRankCache cache(f);
  CohomologyOptions opts;
  CohomologyReport r1 = total_cohomology(f, family1(f, 2, 0), opts, cache);
  const std::size_t after_first = cache.size();
  CHECK(after_first > 0);
  CohomologyReport r2 = total_cohomology(f, family1(f, 2, 0), opts, cache);
  CHECK(r1.dims == r2.dims);
  CHECK(r1.contributions.size() == r2.contributions.size());
  CHECK(total_cohomology(f, family1(f, 2, 0)).dims == r1.dims);

  Fan other = make_blowup_fan(3, 2);
  ToricDivisor d2 = divisor_from_params(other, BlowupParams{3, 2, {Int(0), Int(0)}, Int(0)});
  CHECK_THROWS_AS(total_cohomology(other, d2, opts, cache), FanError);
}

TEST_CASE("closed-form h1 for the one-point family") {
  auto lam = [](int n, Int a, Int b) {
    std::vector<Int> lambda(static_cast<std::size_t>(n) + 2, Int(0));
    lambda[1] = b;
    lambda[static_cast<std::size_t>(n) + 1] = b - a;
    return lambda;
  };
  CHECK(h1_closed_form_onept(3, lam(3, 2, 0)) == 3);
  CHECK(h1_closed_form_onept(3, lam(3, 3, 1)) == 6);
  CHECK(h1_closed_form_onept(3, lam(3, 1, 0)) == 0);
  CHECK(h1_closed_form_onept(3, lam(3, 0, 5)) == 0);
  CHECK(h1_closed_form_onept(3, lam(3, -2, -1)) == 0);
  CHECK(h1_closed_form_onept(4, lam(4, 2, 0)) == 4);  // unit characters of rank 4
  CHECK_THROWS_AS(h1_closed_form_onept(3, {Int(0), Int(0)}), std::invalid_argument);
}

TEST_CASE("vanishing predicates") {
  CHECK(char1_predicate(Int(0), Int(-7)));
  CHECK(char1_predicate(Int(-3), Int(-9)));
  CHECK(char1_predicate(Int(2), Int(1)));
  CHECK(char1_predicate(Int(2), Int(2)));
  CHECK_FALSE(char1_predicate(Int(2), Int(0)));
  CHECK_FALSE(char1_predicate(Int(3), Int(1)));

  using V = std::vector<Int>;
  CHECK(mainthmsev_predicate(V{Int(1), Int(1)}, Int(2)));
  CHECK(mainthmsev_predicate(V{Int(0), Int(0)}, Int(0)));
  CHECK(mainthmsev_predicate(V{Int(2), Int(2)}, Int(3)));
  CHECK_FALSE(mainthmsev_predicate(V{Int(2), Int(2)}, Int(2)));
  CHECK_FALSE(mainthmsev_predicate(V{Int(1), Int(-5)}, Int(-1)));
  CHECK(mainthmsev_predicate(V{Int(1), Int(-5)}, Int(0)));
  CHECK(mainthmsev_predicate(V{Int(1), Int(1), Int(1)}, Int(1)));
  CHECK_FALSE(mainthmsev_predicate(V{Int(2), Int(1), Int(0)}, Int(1)));
  CHECK_THROWS_AS(mainthmsev_predicate(V{Int(1)}, Int(0)), std::invalid_argument);
}

TEST_CASE("disconnection classification") {
  Fan f1 = make_blowup_fan(3, 1);
  DisconnectedClass pair =
      classify_disconnected(f1, family1(f1, 2, 0), {Int(1), Int(0), Int(0)});
  CHECK(pair.kind == DisconnectedClass::pair_e_u);
  CHECK(pair.pair_index == 0);
  CHECK(pair.u_rays.empty());  // the bare two-point pair has no satellites

  Fan f2 = make_blowup_fan(3, 2);
  ToricDivisor d2 = divisor_from_params(f2, BlowupParams{3, 2, {Int(1), Int(1)}, Int(0)});
  DisconnectedClass subset = classify_disconnected(f2, d2, {Int(0), Int(0), Int(0)});
  CHECK(subset.kind == DisconnectedClass::subset_of_u);
  CHECK(subset.u_rays == std::vector<int>{0, 1});

  // D_{u_0} - 3 D_{u_1} at m = (-2,0,0): active rays {u_0, u_1, e_1}, so V
  // is the segment [u_0, e_1] plus the isolated point {u_1} -- the pair
  // {e_1, u_1} splits V while u_0 rides along attached to e_1.
  ToricDivisor d_sat = divisor_from_params(f2, BlowupParams{3, 2, {Int(-1), Int(3)}, Int(0)});
  DisconnectedClass sat = classify_disconnected(f2, d_sat, {Int(-2), Int(0), Int(0)});
  CHECK(sat.kind == DisconnectedClass::pair_e_u);
  CHECK(sat.pair_index == 1);
  CHECK(sat.u_rays == std::vector<int>{0});

  DisconnectedClass conn =
      classify_disconnected(f1, ToricDivisor{}, {Int(0), Int(0), Int(0)});
  CHECK(conn.kind == DisconnectedClass::connected_or_empty);

  CHECK(std::string(to_string(DisconnectedClass::other)) == "other");
}

TEST_CASE("lemma scan finds only the classified shapes") {
  Fan f = make_blowup_fan(3, 1);
  LemmaScanResult s = lemma_scan(f, family1(f, 2, 0));
  CHECK(s.characters > 0);
  CHECK(s.other_count == 0);
  CHECK(s.other_witnesses.empty());
  CHECK(s.pair_count >= 3);  // the three h^1 characters disconnect as {e_0, u_0}
  CHECK(s.disconnected == s.pair_count + s.subset_count + s.other_count);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  SweepGrid g;
  g.n = 3;
  g.points = 2;
  g.a_lo = -1;
  g.a_hi = 1;
  g.b_lo = -1;
  g.b_hi = 1;
  g.jobs = 1;
  std::vector<VanishingVerdict> serial = verify_sweep(g);
  g.jobs = 4;
  std::vector<VanishingVerdict> parallel = verify_sweep(g);
  REQUIRE(serial.size() == parallel.size());
  REQUIRE(serial.size() == 27);  // 3 * 3 a-values, 3 b-values
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].params.a == parallel[i].params.a);
    CHECK(serial[i].params.b == parallel[i].params.b);
    CHECK(serial[i].predicate_says_vanishes == parallel[i].predicate_says_vanishes);
    CHECK(serial[i].oracle_h1 == parallel[i].oracle_h1);
    CHECK(serial[i].agree == parallel[i].agree);
    CHECK(serial[i].error == parallel[i].error);
  }
  // Tuples are in lexicographic order: a_0 outermost, then a_1, then b.
  CHECK(serial.front().params.a == std::vector<Int>{Int(-1), Int(-1)});
  CHECK(serial.front().params.b == -1);
  CHECK(serial.back().params.a == std::vector<Int>{Int(1), Int(1)});
  CHECK(serial.back().params.b == 1);
}

TEST_CASE("sweep agreement on a positive-b patch") {
  SweepGrid g;
  g.n = 3;
  g.points = 3;
  g.a_lo = 0;
  g.a_hi = 2;
  g.b_lo = 0;
  g.b_hi = 2;
  g.jobs = 2;
  for (const auto& row : verify_sweep(g)) {
    const std::string a0 = row.params.a[0].str();
    const std::string b = row.params.b.str();
    CAPTURE(a0);
    CAPTURE(b);
    CHECK(row.error.empty());
    CHECK(row.agree);
  }
}

TEST_CASE("sweep grid validation") {
  SweepGrid g;
  g.n = 2;
  CHECK_THROWS_AS(verify_sweep(g), std::invalid_argument);
  SweepGrid h;
  h.points = 9;
  CHECK_THROWS_AS(verify_sweep(h), std::invalid_argument);
}

TEST_CASE("Serre duality on a sample divisor") {
  Fan f = make_blowup_fan(3, 1);
  ToricDivisor d = family1(f, 2, 0);
  ToricDivisor k = canonical_divisor(f);
  CohomologyReport rd = total_cohomology(f, d);
  CohomologyReport rkd = total_cohomology(f, k - d);
  REQUIRE(rd.dims.size() == 4);
  for (int i = 0; i <= 3; ++i) CHECK(rd.dims[i] == rkd.dims[3 - i]);
}
