#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "polarhull/binning.hpp"
#include "polarhull/errors.hpp"
#include "polarhull/fence.hpp"
#include "polarhull/geometry.hpp"
#include "polarhull/horizon.hpp"
#include "polarhull/hull_algorithms.hpp"
#include "polarhull/instrumentation.hpp"

namespace polarhull {

inline constexpr double kDefaultHorizonInterval = 10.0 * std::numbers::pi / 180.0;
inline constexpr double kExperimentHorizonInterval = 2.0 * std::numbers::pi / 180.0;
inline constexpr double kDefaultContourInterval = std::numbers::pi / 180.0;
inline constexpr std::size_t kDefaultMaxHalvings = 20;
inline constexpr std::size_t kDefaultLeafSize = 64;

enum class FinalAlgorithm { Graham, Jarvis };
enum class SplitScheme { OrderedPolar, Unordered };

// Wall-clock seconds per stage.  Pipelines fill only the stages they run;
// the contour convergence checks ride the binning column.
struct StageSeconds {
  double center = 0.0;
  double polar = 0.0;
  double binning = 0.0;
  double boundary = 0.0;
  double fencing = 0.0;
  double horizon = 0.0;
  double construct = 0.0;
  double solve = 0.0;
  double combine = 0.0;
  double total = 0.0;
};

struct PipelineReport {
  std::size_t input_size = 0;
  std::size_t reduced_size = 0;  // candidates entering the final construction
  std::size_t hull_size = 0;
  double reduction_percent = 0.0;
  std::size_t iterations = 0;      // interval halvings (summed over leaves)
  double final_interval = 0.0;     // radians; finest leaf interval for the splits
  StageSeconds seconds;
  WorkTally work;
  std::size_t horizon_candidates = 0;
  std::size_t combine_work = 0;
};

struct PipelineResult {
  Hull hull;
  PipelineReport report;
  std::vector<std::size_t> reduced;  // candidate indices entering the final construction
};

namespace detail {

class StageClock {
 public:
  StageClock() : last_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_;
};

// Membership test against a canonical hull: binary search over the vertex
// fan at vertices[0].  Exact orientation throughout; O(log h) per query.
inline bool convex_contains(const Hull& hull, const std::vector<Point>& points, const Point& q) {
  const auto& v = hull.vertices;
  const std::size_t m = v.size();
  if (m == 0) return false;
  if (m == 1) return same_coords(points[v[0]], q);
  auto on_segment = [&](const Point& a, const Point& b) {
    return q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
           q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y);
  };
  if (m == 2) {
    return orientation(points[v[0]], points[v[1]], q) == Orientation::Collinear &&
           on_segment(points[v[0]], points[v[1]]);
  }
  const Point& p0 = points[v[0]];
  const Orientation low = orientation(p0, points[v[1]], q);
  if (low == Orientation::Clockwise) return false;
  const Orientation high = orientation(p0, points[v[m - 1]], q);
  if (high == Orientation::CounterClockwise) return false;
  // On a strict hull the supporting line of an edge meets the hull in
  // exactly that edge, so collinear cases reduce to a segment test.
  if (low == Orientation::Collinear) return on_segment(p0, points[v[1]]);
  if (high == Orientation::Collinear) return on_segment(p0, points[v[m - 1]]);
  std::size_t lo = 1;
  std::size_t hi = m - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Orientation o = orientation(p0, points[v[mid]], q);
    if (o == Orientation::Collinear) return on_segment(p0, points[v[mid]]);
    if (o == Orientation::CounterClockwise) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return orientation(points[v[lo]], points[v[hi]], q) != Orientation::Clockwise;
}

// Conservative lower bound on the distance from the center to the hull
// boundary, or 0 when the center is not safely interior.  Probes closer to
// the center than this are inside without further checks.
inline double inradius_lower_bound(const Hull& hull, const std::vector<Point>& hull_points,
                                   const Center& center) {
  const auto& v = hull.vertices;
  if (v.size() < 3) return 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double rmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = hull_points[v[i]];
    const Point& b = hull_points[v[(i + 1) % v.size()]];
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double t1 = ex * (center.y - a.y);
    const double t2 = ey * (center.x - a.x);
    const double cross = t1 - t2;
    const double noise = 8.0 * eps * (std::fabs(t1) + std::fabs(t2));
    if (!(cross > noise)) return 0.0;
    rmin = std::min(rmin, (cross - noise) / std::hypot(ex, ey));
  }
  return rmin * (1.0 - 1e-9);
}

// True when every probe point lies inside or on `hull`.
inline bool covers_input(const Hull& hull, const std::vector<Point>& hull_points,
                         const std::vector<Point>& probes,
                         const std::vector<PolarView>& probe_polar, const Center& center) {
  const double rmin = inradius_lower_bound(hull, hull_points, center);
  for (const PolarView& pv : probe_polar) {
    if (pv.r < rmin) continue;
    if (!convex_contains(hull, hull_points, probes[pv.index])) return false;
  }
  return true;
}

// Probe indices outside the hull, ascending.
inline std::vector<std::size_t> collect_outside(const Hull& hull,
                                                const std::vector<Point>& hull_points,
                                                const std::vector<Point>& probes,
                                                const std::vector<PolarView>& probe_polar,
                                                const Center& center) {
  const double rmin = inradius_lower_bound(hull, hull_points, center);
  std::vector<std::size_t> outside;
  for (const PolarView& pv : probe_polar) {
    if (pv.r < rmin) continue;
    if (!convex_contains(hull, hull_points, probes[pv.index])) outside.push_back(pv.index);
  }
  std::sort(outside.begin(), outside.end());
  return outside;
}

inline void finalize_report(PipelineResult& result, double total_seconds) {
  result.report.hull_size = result.hull.vertices.size();
  if (result.report.input_size > 0) {
    result.report.reduction_percent =
        100.0 * (1.0 - static_cast<double>(result.report.reduced_size) /
                           static_cast<double>(result.report.input_size));
  }
  result.report.seconds.total = total_seconds;
}

// Inputs with fewer than three points skip the reduction machinery.
inline bool degenerate_shortcut(const std::vector<Point>& points, PipelineResult& result) {
  if (points.empty()) throw EmptyInput();
  if (points.size() >= 3) return false;
  result.reduced.resize(points.size());
  std::iota(result.reduced.begin(), result.reduced.end(), std::size_t{0});
  StageClock clock;
  result.hull = canonicalize_hull(result.reduced, points);
  result.report.seconds.construct = clock.lap();
  result.report.reduced_size = result.reduced.size();
  return true;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Maximal-bin union of one split over its theta-sorted member list; matches
// assign_bins + maximal_union at the same interval without materializing the
// mostly empty dense bin array.
inline std::vector<std::size_t> leaf_maximal_union(const std::vector<PolarView>& subpolar,
                                                   const std::vector<std::size_t>& by_theta,
                                                   const BinConfig& config, WorkTally* tally) {
  std::vector<std::size_t> uni;
  const std::size_t n = by_theta.size();
  std::size_t i = 0;
  while (i < n) {
    const std::size_t bin = config.bin_of(subpolar[by_theta[i]].theta);
    double max_r = subpolar[by_theta[i]].r;
    std::size_t j = i + 1;
    for (; j < n && config.bin_of(subpolar[by_theta[j]].theta) == bin; ++j) {
      max_r = std::max(max_r, subpolar[by_theta[j]].r);
    }
    for (std::size_t k = i; k < j; ++k) {
      if (subpolar[by_theta[k]].r == max_r) uni.push_back(by_theta[k]);
    }
    i = j;
  }
  std::sort(uni.begin(), uni.end());
  if (tally != nullptr) tally->binning += n;
  return uni;
}

struct LeafOutcome {
  std::vector<std::size_t> chain;  // original indices, ascending theta
  std::size_t halvings = 0;
  double final_interval = 0.0;
};

// Solves one split by contour scanning in the shared polar frame.  The
// shared center rides along as an extra input point, so the converged chain
// is the outward-facing convex silhouette of the split: it keeps every point
// of the split that is a hull vertex of the full set.  Convergence is a
// stable maximal union whose induced hull verifiably contains the whole
// split; the containment check also runs once before giving up at the
// interval floor or the halving budget.
inline LeafOutcome dnc_leaf_chain(std::vector<std::size_t> members,
                                  const std::vector<Point>& points,
                                  const std::vector<PolarView>& polar, const Center& center,
                                  double initial_interval, std::size_t max_halvings,
                                  WorkTally* tally) {
  LeafOutcome out;
  std::sort(members.begin(), members.end());
  const std::size_t n = members.size();

  auto chain_order = [&](std::vector<std::size_t>& chain) {
    std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
      if (polar[a].theta != polar[b].theta) return polar[a].theta < polar[b].theta;
      return a < b;
    });
  };

  if (n < 3) {
    out.chain = std::move(members);
    // A coordinate twin pair would race at the root sweep; keep the smaller
    // index, matching the dedupe every larger leaf gets from its hull pass.
    if (out.chain.size() == 2 && same_coords(points[out.chain[0]], points[out.chain[1]]))
      out.chain.pop_back();
    chain_order(out.chain);
    return out;
  }

  // Dense local copies; position == local index, as the binning layer expects.
  std::vector<Point> sub(n);
  std::vector<PolarView> subpolar(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t oi = members[i];
    sub[i] = Point{points[oi].x, points[oi].y, i};
    subpolar[i] = polar[oi];
    subpolar[i].index = i;
  }
  std::vector<std::size_t> by_theta(n);
  std::iota(by_theta.begin(), by_theta.end(), std::size_t{0});
  std::sort(by_theta.begin(), by_theta.end(), [&](std::size_t a, std::size_t b) {
    if (subpolar[a].theta != subpolar[b].theta) return subpolar[a].theta < subpolar[b].theta;
    return a < b;
  });
  const BoundaryPoints boundary = compute_boundary_points(sub, tally);

  double interval = initial_interval;
  std::vector<std::size_t> uni =
      leaf_maximal_union(subpolar, by_theta, BinConfig::from_interval(interval), tally);

  std::vector<std::size_t> cand;
  std::vector<std::size_t> last_cand;
  bool have_last = false;
  bool last_ok = false;
  Hull audit_hull;
  std::vector<Point> temp;

  auto audit = [&]() -> bool {
    cand.clear();
    std::set_union(uni.begin(), uni.end(), boundary.indices.begin(), boundary.indices.end(),
                   std::back_inserter(cand));
    if (have_last && cand == last_cand) return last_ok;
    temp.clear();
    temp.reserve(cand.size() + 1);
    for (std::size_t local : cand) {
      temp.push_back(Point{sub[local].x, sub[local].y, temp.size()});
    }
    temp.push_back(Point{center.x, center.y, temp.size()});  // the shared center rides along
    audit_hull = graham_scan(temp);
    last_ok = covers_input(audit_hull, temp, sub, subpolar, center);
    last_cand = cand;
    have_last = true;
    return last_ok;
  };

  std::vector<std::size_t> prev = uni;
  while (true) {
    const double next = interval * 0.5;
    const bool floor_hit = next < kMinBinInterval;
    const bool budget_hit = out.halvings >= max_halvings;
    if (floor_hit || budget_hit) {
      if (audit()) break;  // the candidates already pin down the hull
      // The finest legal bins can still co-bin two distinct extreme rays,
      // leaving the smaller radius permanently shadowed.  Promote every
      // point outside the audited hull; one round restores containment
      // because the grown hull keeps all previously covered points.
      std::vector<std::size_t> extras = collect_outside(audit_hull, temp, sub, subpolar, center);
      std::vector<std::size_t> grown;
      grown.reserve(uni.size() + extras.size());
      std::set_union(uni.begin(), uni.end(), extras.begin(), extras.end(),
                     std::back_inserter(grown));
      uni = std::move(grown);
      if (audit()) break;
      throw IntervalUnderflow(floor_hit ? "bin interval below 2^-20 radians"
                                        : "convergence not reached within the halving budget");
    }
    interval = next;
    ++out.halvings;
    uni = leaf_maximal_union(subpolar, by_theta, BinConfig::from_interval(interval), tally);
    if (uni == prev && audit()) break;
    prev = std::move(uni);
  }
  out.final_interval = interval;

  const std::size_t synthetic = temp.size() - 1;
  out.chain.reserve(audit_hull.vertices.size());
  for (std::size_t v : audit_hull.vertices) {
    if (v == synthetic) continue;
    out.chain.push_back(members[cand[v]]);
  }
  chain_order(out.chain);
  return out;
}

// Same-side-of-the-chord pruning across a merge seam.  Only entries with
// both neighbors inside the window are tested; removal cascades until the
// window is stable.  Valid only while the seam's angular span stays within
// half a turn, which the caller guarantees.
inline void repair_seam(std::vector<std::size_t>& window, const std::vector<Point>& points,
                        const Center& center, std::size_t* combine_work) {
  if (combine_work != nullptr) *combine_work += window.size();
  const Point c{center.x, center.y, 0};
  bool removed = true;
  while (removed && window.size() >= 3) {
    removed = false;
    for (std::size_t i = 1; i + 1 < window.size(); ++i) {
      const Point& a = points[window[i - 1]];
      const Point& p = points[window[i]];
      const Point& b = points[window[i + 1]];
      const Orientation op = orientation(a, b, p);
      bool drop = false;
      if (op == Orientation::Collinear) {
        drop = (a.x != b.x) ? (p.x > std::min(a.x, b.x) && p.x < std::max(a.x, b.x))
                            : (p.y > std::min(a.y, b.y) && p.y < std::max(a.y, b.y));
      } else {
        drop = op == orientation(a, b, c);  // strictly on the center's side
      }
      if (drop) {
        window.erase(window.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
}

}  // namespace detail

// Single-pass reduction: polar binning, boundary points, a convex fence,
// horizon points of every fence gap, then the final fence feeding a classic
// construction over the survivors.
inline PipelineResult hull_via_horizon_reduction(
    const std::vector<Point>& points, double bin_interval = kDefaultHorizonInterval,
    FinalAlgorithm final_algorithm = FinalAlgorithm::Graham) {
  PipelineResult result;
  result.report.input_size = points.size();
  detail::StageClock total;
  if (detail::degenerate_shortcut(points, result)) {
    detail::finalize_report(result, total.lap());
    return result;
  }
  const BinConfig config = BinConfig::from_interval(bin_interval);
  PipelineReport& rep = result.report;

  detail::StageClock clock;
  const Center center = compute_center(points);
  rep.seconds.center = clock.lap();
  const std::vector<PolarView> polar = to_polar(points, center);
  rep.seconds.polar = clock.lap();

  const BinTable table = assign_bins(polar, config, true, &rep.work);
  const std::vector<std::size_t> uni = maximal_union(table);
  rep.seconds.binning = clock.lap();
  const BoundaryPoints boundary = compute_boundary_points(points, &rep.work);
  rep.seconds.boundary = clock.lap();

  FencePointList pre = build_fence(uni, boundary, {}, polar, &rep.work);
  pre = enforce_convexity(pre, points, center);
  rep.seconds.fencing = clock.lap();

  const std::vector<std::size_t> horizon = horizon_computation(
      table, pre, polar, points, center, &rep.work, &rep.horizon_candidates);
  rep.seconds.horizon = clock.lap();

  FencePointList fence = build_fence(uni, boundary, horizon, polar, &rep.work);
  fence = enforce_convexity(fence, points, center);
  rep.seconds.fencing += clock.lap();

  result.reduced.reserve(fence.entries.size());
  for (const FenceEntry& e : fence.entries) result.reduced.push_back(e.index);
  rep.reduced_size = result.reduced.size();

  result.hull = final_algorithm == FinalAlgorithm::Graham
                    ? graham_scan(points, result.reduced)
                    : jarvis_march(points, result.reduced);
  rep.seconds.construct = clock.lap();
  rep.final_interval = config.interval;
  detail::finalize_report(result, total.lap());
  return result;
}

// Adaptive reduction: halve the bin interval until the maximal union is
// stable and the hull induced by union + boundary points verifiably contains
// the whole input.  At the interval floor or the halving budget the check
// runs one final time; if it still fails, the points left outside are
// promoted into the candidate set, which restores containment in a single
// round, so every non-degenerate input converges.
inline PipelineResult hull_via_contour_scanning(const std::vector<Point>& points,
                                                double initial_interval = kDefaultContourInterval,
                                                std::size_t max_halvings = kDefaultMaxHalvings) {
  PipelineResult result;
  result.report.input_size = points.size();
  detail::StageClock total;
  if (detail::degenerate_shortcut(points, result)) {
    detail::finalize_report(result, total.lap());
    return result;
  }
  const BinConfig initial = BinConfig::from_interval(initial_interval);
  PipelineReport& rep = result.report;

  detail::StageClock clock;
  const Center center = compute_center(points);
  rep.seconds.center = clock.lap();
  const std::vector<PolarView> polar = to_polar(points, center);
  rep.seconds.polar = clock.lap();

  BinTable table = assign_bins(polar, initial, false, &rep.work);
  std::vector<std::size_t> uni = maximal_union(table);
  rep.seconds.binning += clock.lap();
  const BoundaryPoints boundary = compute_boundary_points(points, &rep.work);
  rep.seconds.boundary = clock.lap();

  FencePointList fence;  // post-convexity fence of the accepted candidates
  Hull hull;
  std::vector<std::size_t> last_cand;
  bool have_last = false;
  bool last_ok = false;

  auto audit = [&]() -> bool {
    std::vector<std::size_t> cand;
    std::set_union(uni.begin(), uni.end(), boundary.indices.begin(), boundary.indices.end(),
                   std::back_inserter(cand));
    if (have_last && cand == last_cand) return last_ok;
    detail::StageClock sc;
    FencePointList f = build_fence(uni, boundary, {}, polar, &rep.work);
    f = enforce_convexity(f, points, center);
    rep.seconds.fencing += sc.lap();
    Hull h = contour_scan_hull(f, points);
    rep.seconds.construct += sc.lap();
    last_ok = detail::covers_input(h, points, points, polar, center);
    rep.seconds.binning += sc.lap();  // convergence verification rides the binning column
    last_cand = std::move(cand);
    have_last = true;
    fence = std::move(f);  // kept on failure too: the floor fallback probes it
    hull = std::move(h);
    return last_ok;
  };

  std::vector<std::size_t> prev = uni;
  while (true) {
    const double next = table.config.interval * 0.5;
    const bool floor_hit = next < kMinBinInterval;
    const bool budget_hit = rep.iterations >= max_halvings;
    if (floor_hit || budget_hit) {
      if (audit()) break;  // the candidates already pin down the hull
      // The finest legal bins can still co-bin two distinct extreme rays,
      // leaving the smaller radius permanently shadowed.  Promote every
      // point outside the audited hull; one round restores containment
      // because the grown hull keeps all previously covered points.
      std::vector<std::size_t> extras =
          detail::collect_outside(hull, points, points, polar, center);
      std::vector<std::size_t> grown;
      grown.reserve(uni.size() + extras.size());
      std::set_union(uni.begin(), uni.end(), extras.begin(), extras.end(),
                     std::back_inserter(grown));
      uni = std::move(grown);
      if (audit()) break;
      throw IntervalUnderflow(floor_hit ? "bin interval below 2^-20 radians"
                                        : "convergence not reached within the halving budget");
    }
    detail::StageClock sc;
    table = halve_interval(table, polar, &rep.work);
    ++rep.iterations;
    uni = maximal_union(table);
    rep.seconds.binning += sc.lap();
    if (uni == prev && audit()) break;
    prev = std::move(uni);
  }

  rep.final_interval = table.config.interval;
  result.hull = std::move(hull);
  result.reduced.reserve(fence.entries.size());
  for (const FenceEntry& e : fence.entries) result.reduced.push_back(e.index);
  rep.reduced_size = result.reduced.size();
  detail::finalize_report(result, total.lap());
  return result;
}

// Recursive splitting with contour-scanned leaves in the shared polar frame.
// OrderedPolar bisects the angular range and concatenates the child chains,
// pruning a four-entry window across each seam; Unordered shuffles the input
// deterministically, halves by count and recombines child results with a
// scan over their union.
inline PipelineResult divide_and_conquer(const std::vector<Point>& points,
                                         SplitScheme scheme = SplitScheme::OrderedPolar,
                                         std::size_t leaf_size = kDefaultLeafSize) {
  if (leaf_size < 3) throw ConfigError("leaf size must be at least 3");
  PipelineResult result;
  result.report.input_size = points.size();
  detail::StageClock total;
  if (detail::degenerate_shortcut(points, result)) {
    detail::finalize_report(result, total.lap());
    return result;
  }
  PipelineReport& rep = result.report;

  detail::StageClock clock;
  const Center center = compute_center(points);
  rep.seconds.center = clock.lap();
  const std::vector<PolarView> polar = to_polar(points, center);
  rep.seconds.polar = clock.lap();

  double solve_seconds = 0.0;
  double combine_seconds = 0.0;
  double finest = 0.0;
  bool have_finest = false;

  auto leaf_solve = [&](std::vector<std::size_t> members) {
    detail::StageClock sc;
    detail::LeafOutcome leaf =
        detail::dnc_leaf_chain(std::move(members), points, polar, center,
                               kDefaultContourInterval, kDefaultMaxHalvings, &rep.work);
    solve_seconds += sc.lap();
    rep.iterations += leaf.halvings;
    if (leaf.halvings > 0 && (!have_finest || leaf.final_interval < finest)) {
      finest = leaf.final_interval;
      have_finest = true;
    }
    return std::move(leaf.chain);
  };

  if (scheme == SplitScheme::OrderedPolar) {
    detail::StageClock sc;
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (polar[a].theta != polar[b].theta) return polar[a].theta < polar[b].theta;
      if (polar[a].r != polar[b].r) return polar[a].r > polar[b].r;
      return a < b;
    });
    solve_seconds += sc.lap();

    std::function<std::vector<std::size_t>(std::size_t, std::size_t, double, double)> build =
        [&](std::size_t lo, std::size_t hi, double tlo, double thi) -> std::vector<std::size_t> {
      if (lo == hi) return {};
      if (hi - lo <= leaf_size || thi - tlo <= 1e-9) {
        return leaf_solve({order.begin() + static_cast<std::ptrdiff_t>(lo),
                           order.begin() + static_cast<std::ptrdiff_t>(hi)});
      }
      const double mid = 0.5 * (tlo + thi);
      const std::size_t split = static_cast<std::size_t>(
          std::partition_point(order.begin() + static_cast<std::ptrdiff_t>(lo),
                               order.begin() + static_cast<std::ptrdiff_t>(hi),
                               [&](std::size_t idx) { return polar[idx].theta < mid; }) -
          order.begin());
      std::vector<std::size_t> left = build(lo, split, tlo, mid);
      std::vector<std::size_t> right = build(split, hi, mid, thi);
      if (left.empty()) return right;
      if (right.empty()) return left;
      detail::StageClock merge_clock;
      if (thi - tlo <= std::numbers::pi + 1e-12) {
        const std::size_t w1 = std::min<std::size_t>(2, left.size());
        const std::size_t w2 = std::min<std::size_t>(2, right.size());
        std::vector<std::size_t> window(left.end() - static_cast<std::ptrdiff_t>(w1), left.end());
        window.insert(window.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(w2));
        detail::repair_seam(window, points, center, &rep.combine_work);
        left.erase(left.end() - static_cast<std::ptrdiff_t>(w1), left.end());
        left.insert(left.end(), window.begin(), window.end());
        left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(w2), right.end());
      } else {
        left.insert(left.end(), right.begin(), right.end());
      }
      combine_seconds += merge_clock.lap();
      return left;
    };

    std::vector<std::size_t> ring = build(0, points.size(), 0.0, kTwoPi);

    detail::StageClock cc;
    result.reduced = ring;
    std::size_t far = 0;
    for (std::size_t i = 1; i < ring.size(); ++i) {
      if (polar[ring[i]].r > polar[ring[far]].r) far = i;
    }
    std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(far), ring.end());
    const std::vector<std::size_t> swept = detail::anchored_cyclic_sweep(ring, points);
    if (swept.size() >= 3) {
      result.hull = canonicalize_hull(swept, points);
    } else {
      // Flat chain: equal angles leave the chain in index order, so the sweep
      // keeps an arbitrary collinear survivor.  The chain still holds both
      // extremes; a full scan recovers them.
      result.hull = graham_scan(points, result.reduced);
    }
    rep.seconds.construct = cc.lap();
  } else {
    std::vector<std::size_t> perm(points.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t state = 0x243F6A8885A308D3ULL ^ static_cast<std::uint64_t>(points.size());
    for (std::size_t i = perm.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(detail::splitmix64(state) % i);
      std::swap(perm[i - 1], perm[j]);
    }

    std::function<std::vector<std::size_t>(std::size_t, std::size_t, bool)> build =
        [&](std::size_t lo, std::size_t hi, bool root) -> std::vector<std::size_t> {
      if (hi - lo <= leaf_size) {
        std::vector<std::size_t> chain =
            leaf_solve({perm.begin() + static_cast<std::ptrdiff_t>(lo),
                        perm.begin() + static_cast<std::ptrdiff_t>(hi)});
        if (root) result.reduced = chain;
        return chain;
      }
      const std::size_t mid = lo + (hi - lo) / 2;
      std::vector<std::size_t> a = build(lo, mid, false);
      std::vector<std::size_t> b = build(mid, hi, false);
      detail::StageClock merge_clock;
      rep.combine_work += a.size() + b.size();
      a.insert(a.end(), b.begin(), b.end());
      if (root) result.reduced = a;
      Hull h = graham_scan(points, a);
      combine_seconds += merge_clock.lap();
      return h.vertices;
    };

    std::vector<std::size_t> ring = build(0, points.size(), true);
    detail::StageClock cc;
    result.hull = canonicalize_hull(ring, points);
    rep.seconds.construct = cc.lap();
  }

  rep.reduced_size = result.reduced.size();
  rep.seconds.solve = solve_seconds;
  rep.seconds.combine = combine_seconds;
  rep.final_interval = have_finest ? finest : 0.0;
  detail::finalize_report(result, total.lap());
  return result;
}

}  // namespace polarhull
