/**
 * Positivity of toric divisors: support functions built from Cartier data,
 * the wall-by-wall convexity test for nefness and ampleness (with exact
 * witnesses for failures), canonical divisors, and the closed-form tests
 * for the one-point blow-up family.
 */

#ifndef TORIVAN_POSITIVITY_HPP
#define TORIVAN_POSITIVITY_HPP

#include <optional>

#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"

namespace torivan {

/**
 * The piecewise-linear support function of a divisor: on each maximal cone
 * it is u -> <m_sigma, u>. Piecewise consistency across shared faces is a
 * property of valid Cartier data, not re-checked here.
 */
struct SupportFunctionView {
  Fan fan;
  CartierData cartier;
};

SupportFunctionView make_support_view(const Fan& fan, const ToricDivisor& d);

/**
 * Value of the support function at u: <m_sigma, u> for the first maximal
 * cone (in fan order) containing u. Throws FanError when u lies in no cone.
 */
Rational support_eval(const SupportFunctionView& view, const LatticeVector& u);

/** The inequality checked across one wall, with both sides exact. */
struct WallWitness {
  Wall wall;
  int check_ray = -1;  // the unique generator of wall.right outside the wall
  Int lhs;             // support value <m_right, u> at the check vector
  Int rhs;             // linear extension <m_left, u> from the other side
};

/**
 * nef:   lhs <= rhs across every wall (support function convex);
 * ample: lhs <  rhs across every wall (strictly convex).
 * The witness certifies the first wall violating the inequality the caller
 * asked about, and is absent exactly when that verdict is true.
 */
struct PositivityVerdict {
  bool nef = false;
  bool ample = false;
  std::optional<WallWitness> witness;
};

/** Wall criterion for nefness; witness reports the first non-convex wall. */
PositivityVerdict is_nef(const Fan& fan, const ToricDivisor& d);

/** Wall criterion for ampleness; witness reports the first non-strict wall. */
PositivityVerdict is_ample(const Fan& fan, const ToricDivisor& d);

/**
 * Closed-form answer for the one-point blow-up family with parameters
 * (a, b): nef iff 0 <= a <= b, ample iff 0 < a < b.
 */
std::pair<bool, bool> onept_positivity_closed_form(const Int& a, const Int& b);

/** K = -(sum of all ray divisors). */
ToricDivisor canonical_divisor(const Fan& fan);

/** Whether D - K is ample, the hypothesis forcing h^i(O(D)) = 0 for i > 0. */
bool kodaira_precondition(const Fan& fan, const ToricDivisor& d);

}  // namespace torivan

#endif  // TORIVAN_POSITIVITY_HPP
