#include "torivan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "torivan/exact.hpp"

namespace torivan {

namespace {

std::string index_set_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

IntMatrix generator_matrix(const Fan& fan, const Cone& cone) {
  IntMatrix g;
  g.reserve(cone.rays.size());
  for (int r : cone.rays) g.push_back(fan.rays[r]);
  return g;
}

/** Rank over Q of a set of integer row vectors. */
std::size_t rational_rank(const IntMatrix& rows_in, std::size_t width) {
  QMatrix rows;
  rows.reserve(rows_in.size());
  for (const auto& r : rows_in) {
    std::vector<Rational> q(width);
    for (std::size_t j = 0; j < width; ++j) q[j] = Rational(r[j]);
    rows.push_back(std::move(q));
  }
  return rank_rational(std::move(rows));
}

/**
 * Whether a cone of rank k extends to a Z-basis: for full-dimensional cones
 * |det| = 1, otherwise the gcd of all maximal minors must be 1.
 */
bool cone_is_smooth(const Fan& fan, const Cone& cone) {
  const std::size_t k = cone.rays.size();
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  if (k == 0 || k > n) return false;
  const IntMatrix g = generator_matrix(fan, cone);
  if (k == n) {
    const Int d = det_bareiss(g);
    return d == 1 || d == -1;
  }
  // gcd over all k-by-k minors (column subsets chosen by a combination odometer)
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  Int gcd_minors = 0;
  for (;;) {
    IntMatrix sub(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = g[i][cols[j]];
    gcd_minors = boost::multiprecision::gcd(gcd_minors, det_bareiss(std::move(sub)));
    std::size_t pos = k;
    while (pos > 0 && cols[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (std::size_t j = pos; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  if (gcd_minors < 0) gcd_minors = -gcd_minors;
  return gcd_minors == 1;
}

/**
 * Decides whether two simplicial cones intersect exactly in the cone spanned
 * by their shared generators, via a rational separating functional: m with
 * <m,u> = 0 on shared generators, >= 1 on the rest of `a`, <= -1 on the rest
 * of `b`. Existence of such m is equivalent to the common-face property.
 */
bool cones_meet_in_common_face(const Fan& fan, const Cone& a, const Cone& b) {
  std::vector<int> shared, only_a, only_b;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                        std::back_inserter(shared));
  std::set_difference(a.rays.begin(), a.rays.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.rays.begin(), b.rays.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_b));
  if (only_a.empty() && only_b.empty()) return true;  // identical ray sets

  const std::size_t n = static_cast<std::size_t>(fan.dim);
  const std::size_t rows = shared.size() + only_a.size() + only_b.size();
  const std::size_t slack = only_a.size() + only_b.size();
  QMatrix mat(rows, std::vector<Rational>(2 * n + slack, Rational(0)));
  std::vector<Rational> rhs(rows, Rational(0));

  std::size_t row = 0, s = 0;
  auto fill_m_columns = [&](int ray_index) {
    for (std::size_t c = 0; c < n; ++c) {
      mat[row][c] = Rational(fan.rays[ray_index][c]);
      mat[row][n + c] = Rational(-fan.rays[ray_index][c]);
    }
  };
  for (int r : shared) {
    fill_m_columns(r);
    ++row;
  }
  for (int r : only_a) {
    fill_m_columns(r);
    mat[row][2 * n + s] = -1;
    rhs[row] = 1;
    ++row;
    ++s;
  }
  for (int r : only_b) {
    fill_m_columns(r);
    mat[row][2 * n + s] = 1;
    rhs[row] = -1;
    ++row;
    ++s;
  }
  return nonneg_feasible(mat, rhs);
}

struct FacetTable {
  std::map<std::vector<int>, std::vector<int>> owners;  // facet -> cone indices
  bool built = false;
  std::string issue;  // first unshared / overshared facet
};

FacetTable build_facet_table(const Fan& fan) {
  FacetTable t;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& rays = fan.max_cones[c].rays;
    if (rays.size() != static_cast<std::size_t>(fan.dim)) {
      t.issue = "maximal cone " + std::to_string(c) + " is not full-dimensional";
      return t;
    }
    for (std::size_t drop = 0; drop < rays.size(); ++drop) {
      std::vector<int> facet;
      facet.reserve(rays.size() - 1);
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (i != drop) facet.push_back(rays[i]);
      t.owners[facet].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [facet, cones] : t.owners) {
    if (cones.size() == 1) {
      t.issue = "facet " + index_set_to_string(facet) + " of maximal cone " +
                std::to_string(cones[0]) + " is not shared";
      return t;
    }
    if (cones.size() > 2) {
      t.issue = "facet " + index_set_to_string(facet) + " is shared by " +
                std::to_string(cones.size()) + " maximal cones";
      return t;
    }
  }
  t.built = true;
  return t;
}

bool wall_graph_connected(const FacetTable& t, std::size_t num_cones) {
  if (num_cones == 0) return false;
  std::vector<std::vector<int>> adj(num_cones);
  for (const auto& [facet, cones] : t.owners) {
    adj[cones[0]].push_back(cones[1]);
    adj[cones[1]].push_back(cones[0]);
  }
  std::vector<char> seen(num_cones, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int nb : adj[c]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++visited;
        stack.push_back(nb);
      }
    }
  }
  return visited == num_cones;
}

}  // namespace

int Fan::find_ray(const LatticeVector& coords) const {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == coords) return static_cast<int>(i);
  return -1;
}

std::optional<int> Fan::find_max_cone(const std::vector<int>& sorted_ray_indices) const {
  for (std::size_t i = 0; i < max_cones.size(); ++i)
    if (max_cones[i].rays == sorted_ray_indices) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Fan::find_max_cone_by_gens(const std::vector<LatticeVector>& gens) const {
  std::vector<int> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) {
    const int r = find_ray(g);
    if (r < 0) return std::nullopt;
    idx.push_back(r);
  }
  std::sort(idx.begin(), idx.end());
  return find_max_cone(idx);
}

Int pairing(const Character& m, const LatticeVector& u) {
  if (m.size() != u.size())
    throw DimensionMismatch("pairing: character and lattice vector lengths differ");
  Int s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * u[i];
  return s;
}

Fan make_projective_fan(int n) {
  if (n < 3)
    throw FanError("make_projective_fan: n must be at least 3 (constructions assume n >= 3)");
  Fan fan;
  fan.dim = n;
  fan.rays.reserve(n + 1);
  fan.rays.emplace_back(n, Int(-1));  // e_0 = -e_1-...-e_n
  for (int i = 1; i <= n; ++i) {
    LatticeVector e(n, Int(0));
    e[i - 1] = 1;
    fan.rays.push_back(std::move(e));
  }
  for (int i = 0; i <= n; ++i) fan.labels[i] = "e" + std::to_string(i);
  for (int i = 0; i <= n; ++i) {
    Cone sigma;
    for (int j = 0; j <= n; ++j)
      if (j != i) sigma.rays.push_back(j);
    fan.max_cones.push_back(std::move(sigma));
  }
  fan.complete = true;
  fan.smooth = true;
  return fan;
}

Fan star_subdivide(const Fan& fan, const Cone& cone) {
  std::vector<int> key = cone.rays;
  std::sort(key.begin(), key.end());
  const auto pos = fan.find_max_cone(key);
  if (!pos)
    throw FanError("star_subdivide: cone " + index_set_to_string(key) +
                   " is not a maximal cone of the fan");
  if (key.size() != static_cast<std::size_t>(fan.dim))
    throw FanError("star_subdivide: cone is not full-dimensional");
  if (!cone_is_smooth(fan, fan.max_cones[*pos]))
    throw FanError("star_subdivide: cone " + index_set_to_string(key) + " is not smooth");

  LatticeVector barycenter(fan.dim, Int(0));
  for (int r : key)
    for (int c = 0; c < fan.dim; ++c) barycenter[c] += fan.rays[r][c];
  if (fan.find_ray(barycenter) >= 0)
    throw FanError("star_subdivide: generator sum already present in the ray table");

  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.labels = fan.labels;
  out.complete = fan.complete;
  out.smooth = fan.smooth;
  const int new_ray = static_cast<int>(out.rays.size());
  out.rays.push_back(barycenter);
  if (!fan.labels.empty()) {
    int next_u = 0;
    for (const auto& [idx, name] : fan.labels)
      if (!name.empty() && name[0] == 'u') ++next_u;
    out.labels[new_ray] = "u" + std::to_string(next_u);
  }

  for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
    if (static_cast<int>(i) != *pos) out.max_cones.push_back(fan.max_cones[i]);
  for (int dropped : key) {
    Cone c;
    for (int r : key)
      if (r != dropped) c.rays.push_back(r);
    c.rays.push_back(new_ray);
    std::sort(c.rays.begin(), c.rays.end());
    out.max_cones.push_back(std::move(c));
  }
  return out;
}

Fan make_blowup_fan(int n, int num_points) {
  if (n < 3)
    throw FanError("make_blowup_fan: n must be at least 3 (constructions assume n >= 3)");
  if (num_points < 1 || num_points > n + 1)
    throw FanError("make_blowup_fan: num_points must lie in 1.." + std::to_string(n + 1));
  const int q = num_points - 1;

  Fan fan;
  fan.dim = n;
  // Rays u_0,...,u_q (u_i = -e_i) followed by e_0,...,e_n.
  for (int i = 0; i <= q; ++i) {
    if (i == 0) {
      fan.rays.emplace_back(n, Int(1));
    } else {
      LatticeVector u(n, Int(0));
      u[i - 1] = -1;
      fan.rays.push_back(std::move(u));
    }
    fan.labels[i] = "u" + std::to_string(i);
  }
  const int e_base = q + 1;
  fan.rays.emplace_back(n, Int(-1));
  fan.labels[e_base] = "e0";
  for (int i = 1; i <= n; ++i) {
    LatticeVector e(n, Int(0));
    e[i - 1] = 1;
    fan.rays.push_back(std::move(e));
    fan.labels[e_base + i] = "e" + std::to_string(i);
  }

  for (int i = 0; i <= q; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      Cone tau;
      tau.rays.push_back(i);
      for (int k = 0; k <= n; ++k)
        if (k != i && k != j) tau.rays.push_back(e_base + k);
      std::sort(tau.rays.begin(), tau.rays.end());
      fan.max_cones.push_back(std::move(tau));
    }
  }
  for (int j = q + 1; j <= n; ++j) {
    Cone sigma;
    for (int k = 0; k <= n; ++k)
      if (k != j) sigma.rays.push_back(e_base + k);
    fan.max_cones.push_back(std::move(sigma));
  }
  fan.complete = true;
  fan.smooth = true;
  return fan;
}

std::vector<Wall> walls(const Fan& fan) {
  if (fan.max_cones.empty()) throw FanError("walls: fan has no maximal cones");
  const FacetTable t = build_facet_table(fan);
  if (!t.built) throw FanError("walls: fan is not complete: " + t.issue);

  std::vector<Wall> out;
  out.reserve(t.owners.size());
  for (const auto& [facet, cones] : t.owners) {
    Wall w;
    w.left = std::min(cones[0], cones[1]);
    w.right = std::max(cones[0], cones[1]);
    w.shared_rays = facet;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    return a.shared_rays < b.shared_rays;
  });
  return out;
}

FanValidation validate_fan(const Fan& fan) {
  FanValidation v;
  auto note = [&](const std::string& issue) {
    if (v.first_issue.empty()) v.first_issue = issue;
  };

  // Structural sanity first; the remaining checks index into the ray table.
  v.well_formed = true;
  if (fan.dim < 1) {
    v.well_formed = false;
    note("fan dimension must be positive");
  }
  for (std::size_t i = 0; v.well_formed && i < fan.rays.size(); ++i) {
    if (fan.rays[i].size() != static_cast<std::size_t>(fan.dim)) {
      v.well_formed = false;
      note("ray " + std::to_string(i) + " has wrong coordinate count");
    }
  }
  for (std::size_t c = 0; v.well_formed && c < fan.max_cones.size(); ++c) {
    const auto& rays = fan.max_cones[c].rays;
    if (rays.empty()) {
      v.well_formed = false;
      note("maximal cone " + std::to_string(c) + " is empty");
      break;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i] < 0 || rays[i] >= static_cast<int>(fan.rays.size())) {
        v.well_formed = false;
        note("maximal cone " + std::to_string(c) + " references ray " +
             std::to_string(rays[i]) + " outside the ray table");
        break;
      }
      if (i > 0 && rays[i] <= rays[i - 1]) {
        v.well_formed = false;
        note("maximal cone " + std::to_string(c) + " is not sorted strictly");
        break;
      }
    }
  }
  for (std::size_t c = 0; v.well_formed && c < fan.max_cones.size(); ++c) {
    for (std::size_t d = c + 1; d < fan.max_cones.size(); ++d) {
      const auto& a = fan.max_cones[c].rays;
      const auto& b = fan.max_cones[d].rays;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        v.well_formed = false;
        note("maximal cones " + std::to_string(c) + " and " + std::to_string(d) +
             " are nested or equal");
        break;
      }
    }
  }
  if (!v.well_formed) return v;

  v.rays_primitive = true;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const Int g = content(fan.rays[i]);
    if (g == 0) {
      v.rays_primitive = false;
      note("ray " + std::to_string(i) + " is zero");
    } else if (g != 1) {
      v.rays_primitive = false;
      note("ray " + std::to_string(i) + " is not primitive (content " + g.str() + ")");
    }
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j) {
      if (fan.rays[i] == fan.rays[j]) {
        v.rays_primitive = false;
        note("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }

  v.simplicial = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const IntMatrix g = generator_matrix(fan, fan.max_cones[c]);
    if (rational_rank(g, fan.dim) != g.size()) {
      v.simplicial = false;
      note("maximal cone " + std::to_string(c) + " has dependent generators");
    }
  }

  v.smooth = true;
  v.cone_smooth.resize(fan.max_cones.size(), false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    v.cone_smooth[c] = cone_is_smooth(fan, fan.max_cones[c]);
    if (!v.cone_smooth[c]) {
      v.smooth = false;
      note("maximal cone " + std::to_string(c) + " is not smooth");
    }
  }

  v.faces_ok = true;
  if (v.simplicial) {
    for (std::size_t c = 0; c < fan.max_cones.size() && v.faces_ok; ++c) {
      for (std::size_t d = c + 1; d < fan.max_cones.size(); ++d) {
        if (!cones_meet_in_common_face(fan, fan.max_cones[c], fan.max_cones[d])) {
          v.faces_ok = false;
          note("maximal cones " + std::to_string(c) + " and " + std::to_string(d) +
               " do not intersect in a common face");
          break;
        }
      }
    }
  } else {
    v.faces_ok = false;
  }

  const FacetTable t = build_facet_table(fan);
  if (!t.built) {
    v.complete = false;
    note("not complete: " + t.issue);
  } else {
    v.complete = wall_graph_connected(t, fan.max_cones.size());
    if (!v.complete) note("not complete: wall graph is disconnected");
  }
  return v;
}

bool cone_contains(const Fan& fan, const Cone& cone, const LatticeVector& u) {
  if (u.size() != static_cast<std::size_t>(fan.dim))
    throw DimensionMismatch("cone_contains: vector dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  const std::size_t k = cone.rays.size();
  QMatrix a(n, std::vector<Rational>(k));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(fan.rays[cone.rays[j]][i]);
    b[i] = Rational(u[i]);
  }
  return nonneg_feasible(a, b);
}

bool cone_subset(const Fan& fine, const Cone& fine_cone, const Fan& coarse,
                 const Cone& coarse_cone) {
  for (int r : fine_cone.rays)
    if (!cone_contains(coarse, coarse_cone, fine.rays[r])) return false;
  return true;
}

}  // namespace torivan
