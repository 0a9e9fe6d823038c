#include "torivan/positivity.hpp"

#include <algorithm>

namespace torivan {

namespace {

void require_smooth_complete(const Fan& fan, const char* who) {
  if (!fan.complete) throw FanError(std::string(who) + ": fan must be complete");
  if (!fan.smooth) throw FanError(std::string(who) + ": fan must be smooth");
}

/**
 * One pass over all walls, recording both verdicts and the first witness of
 * each kind. Convexity across a wall is a single symmetric condition, so
 * testing the check vector of the higher-indexed cone against the linear
 * extension from the lower-indexed one decides it.
 */
PositivityVerdict wall_scan(const Fan& fan, const ToricDivisor& d, bool want_ample_witness) {
  const CartierData data = cartier_data(fan, d);
  PositivityVerdict v;
  v.nef = true;
  v.ample = true;
  for (const Wall& w : walls(fan)) {
    const auto& right_rays = fan.max_cones[w.right].rays;
    int check_ray = -1;
    for (int r : right_rays) {
      if (!std::binary_search(w.shared_rays.begin(), w.shared_rays.end(), r)) {
        check_ray = r;
        break;
      }
    }
    const Int lhs = pairing(data.per_cone[w.right], fan.rays[check_ray]);
    const Int rhs = pairing(data.per_cone[w.left], fan.rays[check_ray]);
    if (lhs > rhs && v.nef) {
      v.nef = false;
      if (!want_ample_witness) v.witness = WallWitness{w, check_ray, lhs, rhs};
    }
    if (lhs >= rhs && v.ample) {
      v.ample = false;
      if (want_ample_witness) v.witness = WallWitness{w, check_ray, lhs, rhs};
    }
    if (!v.nef && !v.ample) break;
  }
  return v;
}

}  // namespace

SupportFunctionView make_support_view(const Fan& fan, const ToricDivisor& d) {
  return SupportFunctionView{fan, cartier_data(fan, d)};
}

Rational support_eval(const SupportFunctionView& view, const LatticeVector& u) {
  for (std::size_t c = 0; c < view.fan.max_cones.size(); ++c)
    if (cone_contains(view.fan, view.fan.max_cones[c], u))
      return Rational(pairing(view.cartier.per_cone[c], u));
  throw FanError("support_eval: vector lies in no maximal cone");
}

PositivityVerdict is_nef(const Fan& fan, const ToricDivisor& d) {
  require_smooth_complete(fan, "is_nef");
  PositivityVerdict v = wall_scan(fan, d, /*want_ample_witness=*/false);
  if (v.nef) v.witness.reset();
  return v;
}

PositivityVerdict is_ample(const Fan& fan, const ToricDivisor& d) {
  require_smooth_complete(fan, "is_ample");
  PositivityVerdict v = wall_scan(fan, d, /*want_ample_witness=*/true);
  if (v.ample) v.witness.reset();
  return v;
}

std::pair<bool, bool> onept_positivity_closed_form(const Int& a, const Int& b) {
  return {0 <= a && a <= b, 0 < a && a < b};
}

ToricDivisor canonical_divisor(const Fan& fan) {
  ToricDivisor k;
  for (std::size_t rho = 0; rho < fan.rays.size(); ++rho)
    k.coeffs.emplace(static_cast<int>(rho), Int(-1));
  return k;
}

bool kodaira_precondition(const Fan& fan, const ToricDivisor& d) {
  return is_ample(fan, d - canonical_divisor(fan)).ample;
}

}  // namespace torivan
