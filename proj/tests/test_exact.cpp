// Exact linear algebra: determinants, solvers, feasibility, ranks.
#include <doctest.h>

#include "torivan/exact.hpp"

using namespace torivan;

TEST_CASE("det_bareiss on small matrices") {
  CHECK(det_bareiss({{Int(1)}}) == 1);
  CHECK(det_bareiss({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 1);
  CHECK(det_bareiss({{Int(2), Int(3)}, {Int(4), Int(5)}}) == -2);
  CHECK(det_bareiss({{Int(6), Int(1), Int(1)},
                     {Int(4), Int(-2), Int(5)},
                     {Int(2), Int(8), Int(7)}}) == -306);
  CHECK(det_bareiss({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
}

TEST_CASE("det_bareiss stays exact far beyond 64 bits") {
  const Int big = Int("10000000000");  // 10^10
  IntMatrix m(3, std::vector<Int>(3, Int(0)));
  m[0][0] = m[1][1] = m[2][2] = big;
  CHECK(det_bareiss(m) == Int("1000000000000000000000000000000"));  // 10^30
}

TEST_CASE("det_bareiss rejects non-square input") {
  CHECK_THROWS_AS(det_bareiss({{Int(1), Int(2)}}), DimensionMismatch);
}

TEST_CASE("solve_integer recovers integral solutions") {
  // x + y = 3, x - y = 1  =>  (2, 1)
  IntMatrix a{{Int(1), Int(1)}, {Int(1), Int(-1)}};
  std::vector<Int> rhs{Int(3), Int(1)};
  auto x = solve_integer(a, rhs);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
}

TEST_CASE("solve_integer rejects singular and non-integral systems") {
  IntMatrix sing{{Int(1), Int(2)}, {Int(2), Int(4)}};
  CHECK_THROWS_AS(solve_integer(sing, {Int(1), Int(2)}), SingularSystem);
  IntMatrix half{{Int(2), Int(0)}, {Int(0), Int(1)}};
  CHECK_THROWS_AS(solve_integer(half, {Int(1), Int(0)}), SingularSystem);
}

TEST_CASE("solve_rational handles rectangular systems") {
  // x + y = 1 with a redundant doubled row: consistent, y defaults to 0.
  QMatrix a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  auto x = solve_rational(a, {Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == Rational(1));

  QMatrix bad{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK_FALSE(solve_rational(bad, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("nonneg_feasible separates feasible from infeasible") {
  // x0 - x1 = 0, x0 + x1 = 2 has the nonnegative solution (1, 1).
  QMatrix a{{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}};
  CHECK(nonneg_feasible(a, {Rational(0), Rational(2)}));
  // x0 + x1 = -1 has no nonnegative solution.
  QMatrix b{{Rational(1), Rational(1)}};
  CHECK_FALSE(nonneg_feasible(b, {Rational(-1)}));
}

TEST_CASE("rank_rational") {
  CHECK(rank_rational({}) == 0);
  CHECK(rank_rational({{Rational(0), Rational(0)}}) == 0);
  CHECK(rank_rational({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(rank_rational({{Rational(1), Rational(0)},
                       {Rational(0), Rational(1)},
                       {Rational(1), Rational(1)}}) == 2);
  CHECK_THROWS_AS(rank_rational({{Rational(1)}, {Rational(1), Rational(2)}}),
                  DimensionMismatch);
}

TEST_CASE("content is the gcd of the entries") {
  CHECK(content({Int(4), Int(6), Int(-10)}) == 2);
  CHECK(content({Int(0), Int(0)}) == 0);
  CHECK(content({Int(-7)}) == 7);
}
