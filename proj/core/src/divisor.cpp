#include "torivan/divisor.hpp"

#include <algorithm>
#include <string>

#include "torivan/exact.hpp"

namespace torivan {

namespace {

/** Ray index carrying the given label, or FanError. */
int ray_by_label(const Fan& fan, const std::string& label) {
  for (const auto& [idx, name] : fan.labels)
    if (name == label) return idx;
  throw FanError("fan has no ray labeled '" + label + "'");
}

Character cartier_character_for_cone(const Fan& fan, const Cone& cone, const ToricDivisor& d) {
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  if (cone.rays.size() != n)
    throw FanError("cartier data requires full-dimensional maximal cones");
  IntMatrix gens(n, std::vector<Int>(n));
  std::vector<Int> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    gens[i] = fan.rays[cone.rays[i]];
    rhs[i] = -d.coeff(cone.rays[i]);
  }
  return solve_integer(gens, rhs);
}

}  // namespace

void ToricDivisor::set_coeff(int ray, Int value) {
  if (value == 0)
    coeffs.erase(ray);
  else
    coeffs[ray] = std::move(value);
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
  ToricDivisor out = a;
  for (const auto& [ray, c] : b.coeffs) out.set_coeff(ray, out.coeff(ray) + c);
  return out;
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b) {
  ToricDivisor out = a;
  for (const auto& [ray, c] : b.coeffs) out.set_coeff(ray, out.coeff(ray) - c);
  return out;
}

ToricDivisor operator-(const ToricDivisor& a) {
  ToricDivisor out;
  for (const auto& [ray, c] : a.coeffs) out.coeffs.emplace(ray, -c);
  return out;
}

ToricDivisor operator*(const Int& s, const ToricDivisor& a) {
  ToricDivisor out;
  if (s == 0) return out;
  for (const auto& [ray, c] : a.coeffs) out.coeffs.emplace(ray, s * c);
  return out;
}

void validate_params(const BlowupParams& p) {
  if (p.n < 3) throw std::invalid_argument("params: n must be at least 3");
  if (p.points < 1 || p.points > p.n + 1)
    throw std::invalid_argument("params: points must lie in 1..n+1");
  if (p.a.size() != static_cast<std::size_t>(p.points))
    throw std::invalid_argument("params: need exactly one a_i per blown-up point");
}

ToricDivisor div_of_character(const Fan& fan, const Character& m) {
  if (m.size() != static_cast<std::size_t>(fan.dim))
    throw DimensionMismatch("div_of_character: character dimension mismatch");
  ToricDivisor d;
  for (std::size_t rho = 0; rho < fan.rays.size(); ++rho)
    d.set_coeff(static_cast<int>(rho), pairing(m, fan.rays[rho]));
  return d;
}

CartierData cartier_data(const Fan& fan, const ToricDivisor& d) {
  CartierData out;
  out.per_cone.reserve(fan.max_cones.size());
  for (const Cone& cone : fan.max_cones)
    out.per_cone.push_back(cartier_character_for_cone(fan, cone, d));
  return out;
}

ToricDivisor picard_normal_form(const Fan& fan, const Cone& base_cone, const ToricDivisor& d) {
  std::vector<int> key = base_cone.rays;
  std::sort(key.begin(), key.end());
  const auto pos = fan.find_max_cone(key);
  if (!pos) throw FanError("picard_normal_form: base cone is not a maximal cone");
  const Character m = cartier_character_for_cone(fan, fan.max_cones[*pos], d);
  return d + div_of_character(fan, m);
}

ToricDivisor pullback_refinement(const Fan& fine, const Fan& coarse, const ToricDivisor& d) {
  if (fine.dim != coarse.dim)
    throw DimensionMismatch("pullback_refinement: fans live in different lattices");
  const CartierData coarse_data = cartier_data(coarse, d);

  ToricDivisor out;
  std::vector<char> assigned(fine.rays.size(), 0);
  for (std::size_t fc = 0; fc < fine.max_cones.size(); ++fc) {
    int container = -1;
    for (std::size_t cc = 0; cc < coarse.max_cones.size(); ++cc) {
      if (cone_subset(fine, fine.max_cones[fc], coarse, coarse.max_cones[cc])) {
        container = static_cast<int>(cc);
        break;
      }
    }
    if (container < 0)
      throw FanError("pullback_refinement: maximal cone " + std::to_string(fc) +
                     " of the fine fan lies in no maximal cone of the coarse fan");
    const Character& m = coarse_data.per_cone[container];
    for (int rho : fine.max_cones[fc].rays) {
      const Int value = -pairing(m, fine.rays[rho]);
      if (assigned[rho]) {
        if (out.coeff(rho) != value)
          throw FanError("pullback_refinement: inconsistent coefficients at ray " +
                         std::to_string(rho) + "; the fans are not nested refinements");
      } else {
        out.set_coeff(rho, value);
        assigned[rho] = 1;
      }
    }
  }
  for (std::size_t rho = 0; rho < fine.rays.size(); ++rho)
    if (!assigned[rho])
      throw FanError("pullback_refinement: ray " + std::to_string(rho) +
                     " of the fine fan lies in no maximal cone");
  return out;
}

ToricDivisor divisor_from_params(const Fan& fan, const BlowupParams& p) {
  validate_params(p);
  if (fan.dim != p.n)
    throw FanError("divisor_from_params: fan dimension does not match the parameters");
  const std::size_t expected_rays = static_cast<std::size_t>(p.points) +
                                    static_cast<std::size_t>(p.n) + 1;
  if (fan.rays.size() != expected_rays)
    throw FanError("divisor_from_params: fan is not the blow-up at " +
                   std::to_string(p.points) + " points");

  ToricDivisor d;
  if (p.points == 1) {
    d.set_coeff(ray_by_label(fan, "u0"), p.b - p.a[0]);
    d.set_coeff(ray_by_label(fan, "e1"), p.b);
  } else {
    d.set_coeff(ray_by_label(fan, "e0"), p.b);
    d.set_coeff(ray_by_label(fan, "u0"), -p.a[0]);
    for (int i = 1; i < p.points; ++i)
      d.set_coeff(ray_by_label(fan, "u" + std::to_string(i)), p.b - p.a[i]);
  }
  return d;
}

}  // namespace torivan
