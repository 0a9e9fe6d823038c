/**
 * Sheaf cohomology of toric divisors by graded pieces: for each character m
 * the space V_{D,m} (union over maximal cones of the convex hulls of the
 * ray generators with <m,u_rho> < -a_rho) has reduced cohomology equal to
 * the degree-m piece of H^{i}(O(D)) shifted by one. The module builds the
 * nerve of the convex cover, computes exact reduced ranks over Q, restricts
 * the infinite character sum to a finite search box derived from the
 * hyperplane arrangement <m,u_rho> = -a_rho, and packages closed-form
 * counts, vanishing predicates and oracle-vs-predicate sweeps on top.
 *
 * Everything is exact; runtimes are kept desk-scale by memoizing all
 * topology per activity pattern (the bitmask of rays active at m).
 */

#ifndef TORIVAN_COHOMOLOGY_HPP
#define TORIVAN_COHOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"

namespace torivan {

/** The rays active at m (satisfying <m,u_rho> < -a_rho), cone by cone. */
struct ActiveSet {
  std::vector<std::vector<int>> per_cone;  // per maximal cone: its active rays, sorted
  std::vector<int> active_rays;            // union over cones, sorted
};

ActiveSet active_set(const Fan& fan, const ToricDivisor& d, const Character& m);

/**
 * Whether the convex hulls of the given vertex sets have a common point:
 * feasibility of per-piece convex weights with equal barycentric sums,
 * decided by exact rational phase-1 simplex (with a shared-vertex shortcut).
 */
bool pieces_intersect(const std::vector<std::vector<LatticeVector>>& piece_vertex_sets);

/**
 * Nerve of the cover of V_{D,m} by its nonempty per-cone convex pieces.
 * Vertices are deduplicated piece vertex sets; faces[k] lists the simplices
 * with k+1 vertices (sorted index lists, lexicographic order), enumerated
 * with facet pruning up to the full vertex count.
 */
struct NerveComplex {
  std::vector<std::vector<int>> pieces;  // per nerve vertex: sorted ray indices of the hull
  std::vector<std::vector<std::vector<int>>> faces;

  bool empty() const { return pieces.empty(); }
};

NerveComplex nerve(const Fan& fan, const ToricDivisor& d, const Character& m);

/**
 * Ranks of reduced simplicial cohomology over Q. The empty complex carries
 * rank 1 in degree -1 (the convention aligning empty V_{D,m} with H^0);
 * that rank is reported in its own field, ranks[j] covers degrees j >= 0.
 */
struct ReducedRanks {
  int degree_minus1 = 0;
  std::vector<int> ranks;

  bool all_zero() const;
};

ReducedRanks reduced_ranks(const NerveComplex& c);

/** Inclusive per-coordinate character bounds containing all contributions. */
struct SearchBox {
  std::vector<Int> lo;
  std::vector<Int> hi;

  Int volume() const;  // number of lattice points, 0 when some lo > hi
};

struct CohomologyOptions {
  int margin = 1;              // enlargement beyond the arrangement-vertex hull
  long long cap = 10'000'000;  // maximum characters enumerated before erroring
};

/**
 * Box spanned by the vertices of the arrangement {<m,u_rho> = -a_rho}: the
 * exact rational solutions of all invertible n-subsets of rays, floored and
 * ceiled coordinatewise, enlarged by `margin`. Every bounded activity
 * chamber lies inside; unbounded chambers carry no cohomology (certified
 * separately by margin-stability tests). Throws when the rays do not span.
 */
SearchBox search_box(const Fan& fan, const ToricDivisor& d, int margin = 1);

/** One character with nontrivial reduced cohomology. */
struct Contribution {
  Character m;
  std::vector<int> ranks;  // reduced ranks at m from degree 0 up, trailing zeros trimmed
};

/**
 * Total cohomology report: dims[i] = h^i for i = 0..n. dims[0] counts the
 * characters with empty V (the global-section polytope); dims[i] for i >= 1
 * sums reduced degree-(i-1) ranks over the box. The divisor echo is the
 * Picard normal form w.r.t. maximal cone 0, so equivalent presentations
 * produce comparable reports; contributions list the characters of the
 * input presentation with nonzero ranks in degree >= 0, in lexicographic
 * order.
 */
struct CohomologyReport {
  ToricDivisor divisor;
  SearchBox box;
  std::vector<long long> dims;
  std::vector<Contribution> contributions;
};

/**
 * Memoizes reduced nerve ranks per activity pattern of one fan (at most 64
 * rays). The nerve at m depends only on the set of active rays, so one
 * cache serves every divisor and character on its fan; hit rates across a
 * parameter sweep are what make grid verification tractable. The fan must
 * outlive the cache. Instances are not thread-safe: use one per worker.
 */
class NerveRankCache {
 public:
  explicit NerveRankCache(const Fan& fan);

  const ReducedRanks& for_mask(std::uint64_t active_mask);
  const Fan& fan() const { return *fan_; }
  std::size_t size() const { return memo_.size(); }

 private:
  const Fan* fan_;
  std::unordered_map<std::uint64_t, ReducedRanks> memo_;
};

CohomologyReport total_cohomology(const Fan& fan, const ToricDivisor& d,
                                  const CohomologyOptions& options = {});

/** As above, reusing a caller-owned cache (must be built on the same fan). */
CohomologyReport total_cohomology(const Fan& fan, const ToricDivisor& d,
                                  const CohomologyOptions& options, NerveRankCache& cache);

/**
 * Closed-form h^1 for the one-point blow-up family: the number of integer
 * points with m_i >= -lambda_i (i = 1..n) and lambda_0 < m_1+...+m_n <
 * -lambda_{n+1}. `lambda` lists lambda_0..lambda_{n+1} (n+2 entries).
 */
long long h1_closed_form_onept(int n, const std::vector<Int>& lambda);

/** Vanishing predicate for one blown-up point: a <= 0 or a <= b+1. */
bool char1_predicate(const Int& a, const Int& b);

/**
 * Vanishing predicate for q+1 >= 2 points: all pairwise sums a_i+a_j <= b+1,
 * and additionally a_k <= b+1 when exactly one entry a_k is positive.
 * Refuses single-entry input (that case belongs to char1_predicate).
 */
bool mainthmsev_predicate(const std::vector<Int>& a, const Int& b);

/**
 * Shape of V_{D,m} when it is disconnected, for labeled blow-up fans.
 * Distinct u-rays never share a maximal cone, while e_i shares one with
 * every ray generator except its antipode u_i (n >= 3). Disconnection
 * therefore takes exactly two shapes. subset_of_u: no e-ray is active and
 * the active u-rays, at least two, are pairwise isolated points. pair_e_u:
 * exactly one e-ray e_i is active together with its antipode u_i, so {u_i}
 * splits off as one component while every other active u-ray attaches to
 * e_i through a shared cone; u_rays lists those satellites, and V is the
 * bare two-point set {e_i, u_i} exactly when it is empty. Two active
 * e-rays force connectivity. `other` flags a shape outside this catalogue:
 * it cannot arise, and would mean the hull/nerve machinery and the
 * connectivity analysis the closed forms rest on disagree.
 */
struct DisconnectedClass {
  enum Kind { connected_or_empty, pair_e_u, subset_of_u, other };

  Kind kind = connected_or_empty;
  int pair_index = -1;      // the i of {e_i, u_i} for pair_e_u
  std::vector<int> u_rays;  // subset_of_u: all active rays; pair_e_u: the satellites
};

const char* to_string(DisconnectedClass::Kind kind);

DisconnectedClass classify_disconnected(const Fan& fan, const ToricDivisor& d,
                                        const Character& m);

/** classify_disconnected over every character of the box, pattern-memoized. */
struct LemmaScanResult {
  long long characters = 0;
  long long disconnected = 0;
  long long pair_count = 0;
  long long subset_count = 0;
  long long other_count = 0;
  std::vector<Character> other_witnesses;  // first few characters classified `other`
};

LemmaScanResult lemma_scan(const Fan& fan, const ToricDivisor& d,
                           const CohomologyOptions& options = {});

/** Oracle-vs-predicate outcome for one parameter tuple. */
struct VanishingVerdict {
  BlowupParams params;
  bool predicate_says_vanishes = false;
  long long oracle_h1 = -1;
  bool agree = false;
  std::string error;  // nonempty when the oracle failed on this tuple
};

/**
 * Parameter grid for verify_sweep: every a_i ranges over [a_lo, a_hi] and b
 * over [b_lo, b_hi], all inclusive. Tuples are ordered lexicographically by
 * (a_0, ..., a_q, b) regardless of `jobs`.
 */
struct SweepGrid {
  int n = 3;
  int points = 1;
  Int a_lo = 0;
  Int a_hi = 0;
  Int b_lo = 0;
  Int b_hi = 0;
  int jobs = 1;
  CohomologyOptions options;
};

/**
 * Runs the vanishing predicate against the enumeration oracle on every
 * tuple of the grid. Per-tuple failures are recorded in the verdict's error
 * field, never aborting the sweep. Workers share nothing; the result order
 * is deterministic.
 */
std::vector<VanishingVerdict> verify_sweep(const SweepGrid& grid);

}  // namespace torivan

#endif  // TORIVAN_COHOMOLOGY_HPP
