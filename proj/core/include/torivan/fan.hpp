/**
 * Lattice vectors, smooth simplicial cones, complete fans, walls, and the
 * star-subdivision / blow-up constructions for projective space.
 *
 * A Fan stores only its ray table and its maximal cones; faces are implicit
 * subsets. Every value is immutable after construction and every operation
 * is pure, so fans can be shared freely across threads.
 */

#ifndef TORIVAN_FAN_HPP
#define TORIVAN_FAN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torivan/numeric.hpp"

namespace torivan {

/** A point of the cocharacter lattice N (coordinates w.r.t. the standard basis). */
using LatticeVector = std::vector<Int>;

/** A point of the character lattice M (dual coordinates). */
using Character = std::vector<Int>;

/** A simplicial cone, recorded as sorted indices into the owning fan's ray table. */
struct Cone {
  std::vector<int> rays;

  bool operator==(const Cone& o) const { return rays == o.rays; }
};

/**
 * A fan given by its ray generators and maximal cones.
 *
 * `complete` and `smooth` record what the producing constructor (or the JSON
 * loader, after running validate_fan) established about the fan; they are
 * claims consumed as preconditions, not re-derived on each call.
 */
struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> max_cones;
  std::map<int, std::string> labels;  // optional ray names, e.g. "u0", "e2"
  bool complete = false;
  bool smooth = false;

  /** Index of the ray with exactly these coordinates, or -1. */
  int find_ray(const LatticeVector& coords) const;

  /** Index of the maximal cone with exactly this sorted ray-index set, if any. */
  std::optional<int> find_max_cone(const std::vector<int>& sorted_ray_indices) const;

  /** Index of the maximal cone spanned by exactly these generator coordinates, if any. */
  std::optional<int> find_max_cone_by_gens(const std::vector<LatticeVector>& gens) const;
};

/** Codimension-one intersection of two maximal cones. */
struct Wall {
  int left = -1;   // index of the lower-indexed maximal cone
  int right = -1;  // index of the other maximal cone
  std::vector<int> shared_rays;  // sorted, cardinality dim-1
};

/** Verdicts of validate_fan; diagnostics, never exceptions. */
struct FanValidation {
  bool well_formed = false;     // index ranges, sortedness, no duplicate cones
  bool rays_primitive = false;
  bool simplicial = false;
  bool smooth = false;
  std::vector<bool> cone_smooth;  // per maximal cone
  bool faces_ok = false;        // any two maximal cones intersect in a common face
  bool complete = false;        // facet criterion + connected wall graph
  std::string first_issue;      // first counterexample found, empty when ok()

  bool ok() const {
    return well_formed && rays_primitive && simplicial && smooth && faces_ok && complete;
  }
};

/** The bilinear pairing M x N -> Z (exact dot product). */
Int pairing(const Character& m, const LatticeVector& u);

/**
 * The complete smooth fan of n-dimensional projective space: rays
 * e_0 = (-1,...,-1), e_1, ..., e_n and the n+1 maximal cones spanned by the
 * n-element subsets. Requires n >= 3 (the range on which the library's
 * characterizations are stated).
 */
Fan make_projective_fan(int n);

/**
 * Star subdivision along a smooth full-dimensional maximal cone: the cone is
 * replaced by the cones through the sum of its generators, which is appended
 * to the ray table. The result is a refinement with the same support.
 */
Fan star_subdivide(const Fan& fan, const Cone& cone);

/**
 * The blow-up of projective n-space at the first `num_points` torus-fixed
 * points (1 <= num_points <= n+1), built directly: with q = num_points-1,
 * the rays are u_0,...,u_q (u_i = -e_i) followed by e_0,...,e_n, and the
 * maximal cones are the tau_{ij} = Cone(u_i, e_k | k not in {i,j}) together
 * with the untouched sigma_{q+1},...,sigma_n.
 */
Fan make_blowup_fan(int n, int num_points);

/**
 * All walls of a complete fan of full-dimensional simplicial cones. Throws
 * FanError naming the offending facet when some facet is not shared by
 * exactly two maximal cones.
 */
std::vector<Wall> walls(const Fan& fan);

/** Run every structural check and report verdicts with a first counterexample. */
FanValidation validate_fan(const Fan& fan);

/** Whether u is a nonnegative rational combination of the cone's generators. */
bool cone_contains(const Fan& fan, const Cone& cone, const LatticeVector& u);

/**
 * Whether the fine cone is contained in the coarse cone, i.e. every generator
 * of `fine_cone` is a nonnegative rational combination of `coarse_cone`'s
 * generators.
 */
bool cone_subset(const Fan& fine, const Cone& fine_cone, const Fan& coarse,
                 const Cone& coarse_cone);

}  // namespace torivan

#endif  // TORIVAN_FAN_HPP
