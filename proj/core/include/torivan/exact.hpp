/**
 * Exact linear algebra over arbitrary-precision integers and rationals.
 *
 * Everything the library decides — smoothness determinants, Cartier data,
 * cone membership, convex-piece intersection — reduces to one of the small
 * solvers below. Matrices are dense and tiny (dimensions are bounded by the
 * number of rays of a desk-scale fan), so the implementations favor
 * simplicity and exactness over asymptotics.
 */

#ifndef TORIVAN_EXACT_HPP
#define TORIVAN_EXACT_HPP

#include <optional>
#include <vector>

#include "torivan/numeric.hpp"

namespace torivan {

using IntMatrix = std::vector<std::vector<Int>>;
using QMatrix = std::vector<std::vector<Rational>>;

/** Determinant of a square integer matrix (Bareiss fraction-free elimination). */
Int det_bareiss(IntMatrix a);

/**
 * Exact integer solution of the square system a*x = b.
 *
 * Intended for unimodular generator matrices (|det| = 1), where an integer
 * solution always exists. Throws SingularSystem when det(a) = 0, and when
 * det(a) divides no integer solution (the system has no integral solution).
 */
std::vector<Int> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/**
 * Gaussian elimination for a general rational system a*x = b (a is m-by-k).
 *
 * Returns the particular solution with free variables set to zero, or
 * nullopt when the system is inconsistent. When the columns of `a` are
 * linearly independent the solution is unique.
 */
std::optional<std::vector<Rational>> solve_rational(QMatrix a, std::vector<Rational> b);

/**
 * Decides whether {x >= 0 : a*x = b} is nonempty, by a phase-1 simplex with
 * Bland's rule (exact rational pivoting, guaranteed termination).
 */
bool nonneg_feasible(const QMatrix& a, const std::vector<Rational>& b);

/** Rank of a rectangular rational matrix. */
std::size_t rank_rational(QMatrix a);

/** gcd of the absolute values of a vector's entries; 0 for the zero vector. */
Int content(const std::vector<Int>& v);

}  // namespace torivan

#endif  // TORIVAN_EXACT_HPP
