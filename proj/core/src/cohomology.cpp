#include "torivan/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "torivan/exact.hpp"

namespace torivan {

namespace {

void require_divisor_on_fan(const Fan& fan, const ToricDivisor& d) {
  for (const auto& [ray, coeff] : d.coeffs) {
    (void)coeff;
    if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
      throw DimensionMismatch("divisor references ray " + std::to_string(ray) +
                              " outside the fan's ray table");
  }
}

void require_maskable(const Fan& fan) {
  if (fan.rays.size() > 64)
    throw FanError("activity patterns are limited to fans with at most 64 rays");
}

std::uint64_t active_mask(const Fan& fan, const ToricDivisor& d, const Character& m) {
  if (m.size() != static_cast<std::size_t>(fan.dim))
    throw DimensionMismatch("character dimension does not match the fan");
  std::uint64_t mask = 0;
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if (pairing(m, fan.rays[r]) < -d.coeff(static_cast<int>(r)))
      mask |= std::uint64_t{1} << r;
  return mask;
}

/** Nonempty per-cone active hulls, as sorted ray-index sets, first-seen order. */
std::vector<std::vector<int>> pieces_for_mask(const Fan& fan, std::uint64_t mask) {
  std::vector<std::vector<int>> pieces;
  for (const Cone& cone : fan.max_cones) {
    std::vector<int> p;
    for (int r : cone.rays)
      if ((mask >> r) & 1) p.push_back(r);
    if (p.empty()) continue;
    if (std::find(pieces.begin(), pieces.end(), p) == pieces.end())
      pieces.push_back(std::move(p));
  }
  return pieces;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/**
 * Common point of the hulls named by `vertices`. Hulls of generator subsets
 * of a valid fan intersect exactly in the hull of their shared generators,
 * so a shared ray decides almost every query; the exact convex-feasibility
 * solver remains the authority when no ray is shared.
 */
bool simplex_has_point(const Fan& fan, const std::vector<std::vector<int>>& pieces,
                       const std::vector<int>& vertices) {
  std::vector<int> common = pieces[vertices[0]];
  for (std::size_t i = 1; i < vertices.size() && !common.empty(); ++i)
    common = sorted_intersection(common, pieces[vertices[i]]);
  if (!common.empty()) return true;

  std::vector<std::vector<LatticeVector>> sets;
  sets.reserve(vertices.size());
  for (int v : vertices) {
    std::vector<LatticeVector> coords;
    coords.reserve(pieces[v].size());
    for (int r : pieces[v]) coords.push_back(fan.rays[r]);
    sets.push_back(std::move(coords));
  }
  return pieces_intersect(sets);
}

NerveComplex nerve_from_pieces(const Fan& fan, std::vector<std::vector<int>> pieces) {
  NerveComplex c;
  c.pieces = std::move(pieces);
  const int v = static_cast<int>(c.pieces.size());
  if (v == 0) return c;

  c.faces.emplace_back();
  for (int i = 0; i < v; ++i) c.faces[0].push_back({i});

  for (int level = 2; level <= v; ++level) {
    const auto& prev = c.faces[level - 2];
    std::vector<std::vector<int>> cur;
    for (const auto& s : prev) {
      for (int w = s.back() + 1; w < v; ++w) {
        std::vector<int> cand = s;
        cand.push_back(w);
        bool facets_present = true;  // dropping w yields s itself, already known
        for (std::size_t drop = 0; facets_present && drop + 1 < cand.size(); ++drop) {
          std::vector<int> facet;
          facet.reserve(cand.size() - 1);
          for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != drop) facet.push_back(cand[j]);
          facets_present = std::binary_search(prev.begin(), prev.end(), facet);
        }
        if (!facets_present) continue;
        if (!simplex_has_point(fan, c.pieces, cand)) continue;
        cur.push_back(std::move(cand));
      }
    }
    if (cur.empty()) break;
    c.faces.push_back(std::move(cur));
  }
  return c;
}

ReducedRanks ranks_for_mask_uncached(const Fan& fan, std::uint64_t mask) {
  std::vector<std::vector<int>> pieces = pieces_for_mask(fan, mask);
  ReducedRanks out;
  if (pieces.empty()) {
    out.degree_minus1 = 1;
    return out;
  }
  // A ray shared by every piece makes the nerve a full simplex: contractible.
  std::vector<int> common = pieces[0];
  for (std::size_t i = 1; i < pieces.size() && !common.empty(); ++i)
    common = sorted_intersection(common, pieces[i]);
  if (!common.empty()) return out;

  return reduced_ranks(nerve_from_pieces(fan, std::move(pieces)));
}

Int floor_rational(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_rational(const Rational& r) { return -floor_rational(-r); }

/**
 * Visits every character of the box in lexicographic order, handing the
 * leaf its activity mask. Pairings are maintained incrementally: stepping
 * one coordinate adds one generator entry per ray, so the innermost loop
 * costs a handful of integer additions regardless of dimension.
 */
template <typename Leaf>
void enumerate_box(const Fan& fan, const ToricDivisor& d, const SearchBox& box, Leaf&& leaf) {
  const int n = fan.dim;
  const std::size_t nrays = fan.rays.size();
  for (int c = 0; c < n; ++c)
    if (box.lo[c] > box.hi[c]) return;

  std::vector<Int> neg_a(nrays);
  for (std::size_t r = 0; r < nrays; ++r) neg_a[r] = -d.coeff(static_cast<int>(r));
  std::vector<Int> partial(nrays, Int(0));
  Character m(n, Int(0));

  auto rec = [&](auto&& self, int level) -> void {
    if (level == n) {
      std::uint64_t mask = 0;
      for (std::size_t r = 0; r < nrays; ++r)
        if (partial[r] < neg_a[r]) mask |= std::uint64_t{1} << r;
      leaf(static_cast<const Character&>(m), mask);
      return;
    }
    for (std::size_t r = 0; r < nrays; ++r) partial[r] += box.lo[level] * fan.rays[r][level];
    m[level] = box.lo[level];
    for (;;) {
      self(self, level + 1);
      if (m[level] == box.hi[level]) break;
      ++m[level];
      for (std::size_t r = 0; r < nrays; ++r) partial[r] += fan.rays[r][level];
    }
    for (std::size_t r = 0; r < nrays; ++r) partial[r] -= box.hi[level] * fan.rays[r][level];
  };
  rec(rec, 0);
}

void require_box_under_cap(const SearchBox& box, long long cap) {
  const Int vol = box.volume();
  if (vol > cap)
    throw EnumerationCapExceeded("search box holds " + vol.str() +
                                 " characters, above the cap of " + std::to_string(cap));
}

std::optional<std::pair<char, int>> parse_ray_label(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'u' && name[0] != 'e')) return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    idx = idx * 10 + (name[i] - '0');
  }
  return std::make_pair(name[0], idx);
}

DisconnectedClass classify_mask(const Fan& fan, std::uint64_t mask) {
  DisconnectedClass out;
  const std::vector<std::vector<int>> pieces = pieces_for_mask(fan, mask);
  if (pieces.size() <= 1) return out;  // connected_or_empty

  // Union-find over nerve vertices; edges wherever two hulls meet.
  std::vector<int> parent(pieces.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (simplex_has_point(fan, pieces, {static_cast<int>(i), static_cast<int>(j)}))
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
  int components = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  if (components <= 1) return out;

  std::vector<int> active;
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if ((mask >> r) & 1) active.push_back(static_cast<int>(r));

  std::vector<std::pair<char, int>> tags;
  for (int r : active) {
    const auto it = fan.labels.find(r);
    const auto tag = it == fan.labels.end() ? std::nullopt : parse_ray_label(it->second);
    if (!tag)
      throw FanError("classify_disconnected requires the u/e ray labels of a blow-up fan");
    tags.push_back(*tag);
  }

  int e_count = 0, e_label = -1;
  for (const auto& t : tags)
    if (t.first == 'e') {
      ++e_count;
      e_label = t.second;
    }

  // No active e-ray: u-rays never share a cone, so each is its own
  // component. Demand that the computed components agree.
  if (e_count == 0) {
    if (components == static_cast<int>(active.size())) {
      out.kind = DisconnectedClass::subset_of_u;
      out.u_rays = active;
      return out;
    }
    out.kind = DisconnectedClass::other;
    return out;
  }

  // Exactly one active e-ray e_i. Every other ray generator shares a cone
  // with e_i except its antipode u_i, so a split needs u_i active and
  // leaves {u_i} alone against e_i plus any satellite u-rays.
  if (e_count == 1) {
    bool antipode_active = false;
    std::vector<int> satellites;
    for (std::size_t k = 0; k < tags.size(); ++k) {
      if (tags[k].first != 'u') continue;
      if (tags[k].second == e_label)
        antipode_active = true;
      else
        satellites.push_back(active[k]);
    }
    if (antipode_active && components == 2) {
      out.kind = DisconnectedClass::pair_e_u;
      out.pair_index = e_label;
      out.u_rays = std::move(satellites);
      return out;
    }
  }

  // Two active e-rays force connectivity, so reaching this point means the
  // hull machinery and the catalogue disagree.
  out.kind = DisconnectedClass::other;
  return out;
}

void require_complete_smooth(const Fan& fan, const char* who) {
  if (fan.dim < 3) throw FanError(std::string(who) + ": fan dimension must be at least 3");
  if (!fan.complete) throw FanError(std::string(who) + ": fan must be complete");
  if (!fan.smooth) throw FanError(std::string(who) + ": fan must be smooth");
}

}  // namespace

ActiveSet active_set(const Fan& fan, const ToricDivisor& d, const Character& m) {
  require_divisor_on_fan(fan, d);
  require_maskable(fan);
  const std::uint64_t mask = active_mask(fan, d, m);
  ActiveSet out;
  out.per_cone.reserve(fan.max_cones.size());
  for (const Cone& cone : fan.max_cones) {
    std::vector<int> rows;
    for (int r : cone.rays)
      if ((mask >> r) & 1) rows.push_back(r);
    out.per_cone.push_back(std::move(rows));
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if ((mask >> r) & 1) out.active_rays.push_back(static_cast<int>(r));
  return out;
}

bool pieces_intersect(const std::vector<std::vector<LatticeVector>>& piece_vertex_sets) {
  const std::size_t p = piece_vertex_sets.size();
  if (p <= 1) return true;
  const std::size_t n = piece_vertex_sets[0].empty() ? 0 : piece_vertex_sets[0][0].size();
  std::size_t vars = 0;
  for (const auto& set : piece_vertex_sets) {
    if (set.empty()) throw std::invalid_argument("pieces_intersect: empty vertex set");
    for (const auto& w : set)
      if (w.size() != n) throw DimensionMismatch("pieces_intersect: mixed ambient dimensions");
    vars += set.size();
  }

  // Shared vertex: a point that is a vertex of every piece is in every hull.
  for (const auto& w : piece_vertex_sets[0]) {
    bool everywhere = true;
    for (std::size_t k = 1; everywhere && k < p; ++k)
      everywhere = std::find(piece_vertex_sets[k].begin(), piece_vertex_sets[k].end(), w) !=
                   piece_vertex_sets[k].end();
    if (everywhere) return true;
  }

  // Convex weights x >= 0: per-piece weights sum to 1 and all barycenters agree.
  const std::size_t rows = p + n * (p - 1);
  QMatrix a(rows, std::vector<Rational>(vars, Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  std::vector<std::size_t> block_start(p, 0);
  for (std::size_t k = 1; k < p; ++k)
    block_start[k] = block_start[k - 1] + piece_vertex_sets[k - 1].size();
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t j = 0; j < piece_vertex_sets[k].size(); ++j) a[k][block_start[k] + j] = 1;
    b[k] = 1;
  }
  for (std::size_t k = 1; k < p; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      auto& row = a[p + (k - 1) * n + c];
      for (std::size_t j = 0; j < piece_vertex_sets[0].size(); ++j)
        row[block_start[0] + j] = Rational(piece_vertex_sets[0][j][c]);
      for (std::size_t j = 0; j < piece_vertex_sets[k].size(); ++j)
        row[block_start[k] + j] = Rational(-piece_vertex_sets[k][j][c]);
    }
  }
  return nonneg_feasible(a, b);
}

NerveComplex nerve(const Fan& fan, const ToricDivisor& d, const Character& m) {
  require_divisor_on_fan(fan, d);
  require_maskable(fan);
  return nerve_from_pieces(fan, pieces_for_mask(fan, active_mask(fan, d, m)));
}

bool ReducedRanks::all_zero() const {
  if (degree_minus1 != 0) return false;
  return std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 0; });
}

ReducedRanks reduced_ranks(const NerveComplex& c) {
  ReducedRanks out;
  if (c.empty()) {
    out.degree_minus1 = 1;
    return out;
  }
  const int top = static_cast<int>(c.faces.size()) - 1;
  // rk[j+1] = rank of the coboundary C^j -> C^{j+1}; the augmentation
  // C^{-1} -> C^0 has rank 1 for every nonempty complex.
  std::vector<std::size_t> rk(top + 2, 0);
  rk[0] = 1;
  for (int j = 0; j < top; ++j) {
    const auto& lo = c.faces[j];
    const auto& hi = c.faces[j + 1];
    QMatrix mat(hi.size(), std::vector<Rational>(lo.size(), Rational(0)));
    for (std::size_t row = 0; row < hi.size(); ++row) {
      const auto& simplex = hi[row];
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> facet;
        facet.reserve(simplex.size() - 1);
        for (std::size_t i = 0; i < simplex.size(); ++i)
          if (i != drop) facet.push_back(simplex[i]);
        const auto it = std::lower_bound(lo.begin(), lo.end(), facet);
        mat[row][static_cast<std::size_t>(it - lo.begin())] = (drop % 2 == 0) ? 1 : -1;
      }
    }
    rk[j + 1] = rank_rational(std::move(mat));
  }
  out.ranks.assign(top + 1, 0);
  for (int j = 0; j <= top; ++j) {
    const long long count = static_cast<long long>(c.faces[j].size());
    out.ranks[j] = static_cast<int>(count - static_cast<long long>(rk[j]) -
                                    static_cast<long long>(rk[j + 1]));
  }
  return out;
}

Int SearchBox::volume() const {
  Int v = 1;
  for (std::size_t c = 0; c < lo.size(); ++c) {
    if (lo[c] > hi[c]) return 0;
    v *= hi[c] - lo[c] + 1;
  }
  return v;
}

SearchBox search_box(const Fan& fan, const ToricDivisor& d, int margin) {
  require_divisor_on_fan(fan, d);
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  const std::size_t nrays = fan.rays.size();
  if (nrays < n) throw FanError("search_box: the rays do not span the character space");

  std::vector<Rational> min_c(n), max_c(n);
  bool any = false;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    IntMatrix gens(n, std::vector<Int>(n));
    std::vector<Rational> rhs(n);
    QMatrix qgens(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      gens[i] = fan.rays[pick[i]];
      rhs[i] = Rational(-d.coeff(static_cast<int>(pick[i])));
      for (std::size_t j = 0; j < n; ++j) qgens[i][j] = Rational(gens[i][j]);
    }
    if (det_bareiss(gens) != 0) {
      const auto sol = solve_rational(std::move(qgens), std::move(rhs));
      for (std::size_t c = 0; c < n; ++c) {
        if (!any || (*sol)[c] < min_c[c]) min_c[c] = (*sol)[c];
        if (!any || (*sol)[c] > max_c[c]) max_c[c] = (*sol)[c];
        if (c + 1 == n) any = true;
      }
    }
    std::size_t pos = n;
    while (pos > 0 && pick[pos - 1] == nrays - n + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!any) throw FanError("search_box: the rays do not span the character space");

  SearchBox box;
  box.lo.resize(n);
  box.hi.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    box.lo[c] = floor_rational(min_c[c]) - margin;
    box.hi[c] = ceil_rational(max_c[c]) + margin;
  }
  return box;
}

NerveRankCache::NerveRankCache(const Fan& fan) : fan_(&fan) { require_maskable(fan); }

const ReducedRanks& NerveRankCache::for_mask(std::uint64_t active_mask) {
  const auto it = memo_.find(active_mask);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(active_mask, ranks_for_mask_uncached(*fan_, active_mask)).first->second;
}

CohomologyReport total_cohomology(const Fan& fan, const ToricDivisor& d,
                                  const CohomologyOptions& options) {
  NerveRankCache cache(fan);
  return total_cohomology(fan, d, options, cache);
}

CohomologyReport total_cohomology(const Fan& fan, const ToricDivisor& d,
                                  const CohomologyOptions& options, NerveRankCache& cache) {
  require_complete_smooth(fan, "total_cohomology");
  require_divisor_on_fan(fan, d);
  require_maskable(fan);
  if (&cache.fan() != &fan)
    throw FanError("total_cohomology: the rank cache was built for a different fan");

  CohomologyReport report;
  report.box = search_box(fan, d, options.margin);
  require_box_under_cap(report.box, options.cap);
  report.dims.assign(fan.dim + 1, 0);

  enumerate_box(fan, d, report.box, [&](const Character& m, std::uint64_t mask) {
    if (mask == 0) {
      ++report.dims[0];
      return;
    }
    const ReducedRanks& rr = cache.for_mask(mask);
    if (rr.all_zero()) return;
    Contribution contrib;
    contrib.m = m;
    contrib.ranks = rr.ranks;
    while (!contrib.ranks.empty() && contrib.ranks.back() == 0) contrib.ranks.pop_back();
    for (std::size_t j = 0; j < rr.ranks.size() && j + 1 <= static_cast<std::size_t>(fan.dim);
         ++j)
      report.dims[j + 1] += rr.ranks[j];
    report.contributions.push_back(std::move(contrib));
  });

  report.divisor = picard_normal_form(fan, fan.max_cones[0], d);
  return report;
}

long long h1_closed_form_onept(int n, const std::vector<Int>& lambda) {
  if (n < 3) throw std::invalid_argument("h1_closed_form_onept: n must be at least 3");
  if (lambda.size() != static_cast<std::size_t>(n) + 2)
    throw std::invalid_argument("h1_closed_form_onept: lambda must have n+2 entries");
  const Int sum_lo = lambda[0];       // strict lower bound on m_1+...+m_n
  const Int sum_hi = -lambda[n + 1];  // strict upper bound
  if (sum_hi - sum_lo <= 1) return 0;

  // Least possible value of m_{i+1}+...+m_n given the per-coordinate floors.
  std::vector<Int> min_suffix(n + 1, Int(0));
  for (int i = n - 1; i >= 0; --i) min_suffix[i] = min_suffix[i + 1] - lambda[i + 1];

  long long count = 0;
  auto rec = [&](auto&& self, int i, const Int& partial) -> void {
    if (i == n - 1) {
      Int lo = -lambda[n];
      const Int lo_from_sum = sum_lo + 1 - partial;
      if (lo_from_sum > lo) lo = lo_from_sum;
      const Int hi = sum_hi - 1 - partial;
      if (hi >= lo) count += static_cast<long long>((hi - lo + 1).convert_to<long long>());
      return;
    }
    const Int hi = sum_hi - 1 - partial - min_suffix[i + 1];
    for (Int v = -lambda[i + 1]; v <= hi; ++v) self(self, i + 1, partial + v);
  };
  rec(rec, 0, Int(0));
  return count;
}

bool char1_predicate(const Int& a, const Int& b) { return a <= 0 || a <= b + 1; }

bool mainthmsev_predicate(const std::vector<Int>& a, const Int& b) {
  if (a.size() < 2)
    throw std::invalid_argument(
        "mainthmsev_predicate needs at least two entries; the single-point case is "
        "char1_predicate");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] + a[j] > b + 1) return false;
  std::size_t positives = 0, last_positive = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) {
      ++positives;
      last_positive = i;
    }
  }
  if (positives == 1 && a[last_positive] > b + 1) return false;
  return true;
}

const char* to_string(DisconnectedClass::Kind kind) {
  switch (kind) {
    case DisconnectedClass::connected_or_empty: return "connected_or_empty";
    case DisconnectedClass::pair_e_u: return "pair_e_u";
    case DisconnectedClass::subset_of_u: return "subset_of_u";
    default: return "other";
  }
}

DisconnectedClass classify_disconnected(const Fan& fan, const ToricDivisor& d,
                                        const Character& m) {
  require_divisor_on_fan(fan, d);
  require_maskable(fan);
  return classify_mask(fan, active_mask(fan, d, m));
}

LemmaScanResult lemma_scan(const Fan& fan, const ToricDivisor& d,
                           const CohomologyOptions& options) {
  require_divisor_on_fan(fan, d);
  require_maskable(fan);
  const SearchBox box = search_box(fan, d, options.margin);
  require_box_under_cap(box, options.cap);

  LemmaScanResult result;
  std::unordered_map<std::uint64_t, DisconnectedClass::Kind> memo;
  enumerate_box(fan, d, box, [&](const Character& m, std::uint64_t mask) {
    ++result.characters;
    auto it = memo.find(mask);
    if (it == memo.end()) it = memo.emplace(mask, classify_mask(fan, mask).kind).first;
    switch (it->second) {
      case DisconnectedClass::connected_or_empty: return;
      case DisconnectedClass::pair_e_u:
        ++result.disconnected;
        ++result.pair_count;
        return;
      case DisconnectedClass::subset_of_u:
        ++result.disconnected;
        ++result.subset_count;
        return;
      default:
        ++result.disconnected;
        ++result.other_count;
        if (result.other_witnesses.size() < 8) result.other_witnesses.push_back(m);
    }
  });
  return result;
}

std::vector<VanishingVerdict> verify_sweep(const SweepGrid& grid) {
  if (grid.n < 3) throw std::invalid_argument("verify_sweep: n must be at least 3");
  if (grid.points < 1 || grid.points > grid.n + 1)
    throw std::invalid_argument("verify_sweep: points must lie in 1..n+1");
  if (grid.a_lo > grid.a_hi || grid.b_lo > grid.b_hi) return {};

  const Int a_size = grid.a_hi - grid.a_lo + 1;
  const Int b_size = grid.b_hi - grid.b_lo + 1;
  Int total = b_size;
  for (int i = 0; i < grid.points; ++i) total *= a_size;
  if (total > 1'000'000'000)
    throw std::invalid_argument("verify_sweep: grid holds " + total.str() + " tuples");
  const long long t = total.convert_to<long long>();

  const Fan fan = make_blowup_fan(grid.n, grid.points);
  std::vector<VanishingVerdict> out(static_cast<std::size_t>(t));
  std::atomic<long long> next{0};

  auto worker = [&]() {
    NerveRankCache cache(fan);
    const long long a_span = a_size.convert_to<long long>();
    const long long b_span = b_size.convert_to<long long>();
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= t) break;
      BlowupParams p;
      p.n = grid.n;
      p.points = grid.points;
      p.a.assign(grid.points, Int(0));
      long long rest = i;
      p.b = grid.b_lo + Int(rest % b_span);
      rest /= b_span;
      for (int k = grid.points - 1; k >= 0; --k) {
        p.a[k] = grid.a_lo + Int(rest % a_span);
        rest /= a_span;
      }

      VanishingVerdict v;
      v.params = p;
      v.predicate_says_vanishes =
          p.points == 1 ? char1_predicate(p.a[0], p.b) : mainthmsev_predicate(p.a, p.b);
      try {
        const ToricDivisor d = divisor_from_params(fan, p);
        const CohomologyReport r = total_cohomology(fan, d, grid.options, cache);
        v.oracle_h1 = r.dims[1];
        v.agree = v.predicate_says_vanishes == (v.oracle_h1 == 0);
      } catch (const std::exception& e) {
        v.oracle_h1 = -1;
        v.agree = false;
        v.error = e.what();
      }
      out[static_cast<std::size_t>(i)] = std::move(v);
    }
  };

  const int jobs = std::max(1, grid.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace torivan
