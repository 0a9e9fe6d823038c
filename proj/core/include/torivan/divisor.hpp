/**
 * Torus-invariant divisors: sparse coefficient vectors over a fan's rays,
 * principal divisors of characters, Cartier data, normal forms modulo linear
 * equivalence, and pullback along refinements.
 *
 * Divisors are stored sparsely and kept canonical (zero coefficients are
 * never stored), so equality of the maps is equality of divisors.
 */

#ifndef TORIVAN_DIVISOR_HPP
#define TORIVAN_DIVISOR_HPP

#include <map>
#include <vector>

#include "torivan/fan.hpp"
#include "torivan/numeric.hpp"

namespace torivan {

/** D = sum of coeffs[rho] * D_rho over the rays of the attached fan. */
struct ToricDivisor {
  std::map<int, Int> coeffs;  // ray index -> coefficient; absent = 0

  Int coeff(int ray) const {
    const auto it = coeffs.find(ray);
    return it == coeffs.end() ? Int(0) : it->second;
  }
  /** Insert-or-erase so that the stored map stays zero-free. */
  void set_coeff(int ray, Int value);

  bool operator==(const ToricDivisor& o) const { return coeffs == o.coeffs; }
};

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator-(const ToricDivisor& a);
ToricDivisor operator*(const Int& s, const ToricDivisor& a);

/** One character m_sigma per maximal cone, with <m_sigma, u_rho> = -a_rho on sigma's rays. */
struct CartierData {
  std::vector<Character> per_cone;  // indexed like fan.max_cones
};

/**
 * Parameters of the divisor family on the blow-up of P^n at `points`
 * torus-fixed points: the class of O(-a_0 E_0 - ... - a_q E_q) twisted by
 * the pullback of O(b), with q = points - 1.
 */
struct BlowupParams {
  int n = 3;
  int points = 1;      // q + 1, between 1 and n+1
  std::vector<Int> a;  // a_0..a_q, one per blown-up point
  Int b = 0;
};

/** Throws std::invalid_argument unless n >= 3, 1 <= points <= n+1, |a| = points. */
void validate_params(const BlowupParams& p);

/** div(m) = sum over rays of <m, u_rho> D_rho. */
ToricDivisor div_of_character(const Fan& fan, const Character& m);

/**
 * The Cartier data of D: per maximal cone the unique integer solution of
 * the square system <m, u_rho> = -a_rho over the cone's generators.
 * Requires full-dimensional cones; smooth fans guarantee integrality.
 */
CartierData cartier_data(const Fan& fan, const ToricDivisor& d);

/**
 * D + div(m_base), the representative of [D] with zero coefficients on the
 * base cone's rays. Idempotent, and invariant under D -> D + div(m).
 */
ToricDivisor picard_normal_form(const Fan& fan, const Cone& base_cone, const ToricDivisor& d);

/**
 * Pullback of a divisor on `coarse` to the refinement `fine` (same lattice):
 * each maximal cone of `fine` inherits the Cartier character of the
 * lowest-index coarse cone containing it, and coefficients are read off as
 * -<m, u_rho>. Throws FanError when some fine cone fits in no coarse cone.
 */
ToricDivisor pullback_refinement(const Fan& fine, const Fan& coarse, const ToricDivisor& d);

/**
 * The divisor of the parameter family on fan = make_blowup_fan(p.n, p.points):
 * one point:   (b - a_0) D_{u_0} + b D_{e_1};
 * many points: b D_{e_0} - a_0 D_{u_0} + sum_{i=1..q} (b - a_i) D_{u_i}.
 * Both present the class O(-sum a_i E_i) twisted by the pullback of O(b).
 */
ToricDivisor divisor_from_params(const Fan& fan, const BlowupParams& p);

}  // namespace torivan

#endif  // TORIVAN_DIVISOR_HPP
