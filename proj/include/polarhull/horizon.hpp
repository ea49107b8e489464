#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "polarhull/binning.hpp"
#include "polarhull/errors.hpp"
#include "polarhull/fence.hpp"
#include "polarhull/geometry.hpp"
#include "polarhull/instrumentation.hpp"

namespace polarhull {

struct HorizonMember {
  std::size_t index = 0;
  double angle = 0.0;  // horizon angle at the anchor
};

// Candidates of one anchor wedge whose horizon angle at the anchor is at
// least the anchor-to-terminal angle ("on or above the horizon line").
struct HorizonSet {
  long bin_index = -1;  // bin of the anchor; informational
  std::size_t anchor = 0;
  std::size_t terminal = 0;
  std::vector<HorizonMember> members;
};

struct HorizonPointSequence {
  std::vector<std::size_t> points;
};

// Filters `candidates` (points with theta strictly between the anchor and
// terminal angles) by the non-strict horizon inequality
// ha(anchor, p) >= ha(anchor, terminal).
inline HorizonSet compute_horizon_set(std::size_t anchor, std::size_t terminal,
                                      const std::vector<std::size_t>& candidates,
                                      const std::vector<Point>& points, const Center& center,
                                      long bin_index = -1) {
  HorizonSet set;
  set.bin_index = bin_index;
  set.anchor = anchor;
  set.terminal = terminal;
  const double threshold = horizon_angle(points[anchor], points[terminal], center);
  set.members.reserve(candidates.size());
  for (std::size_t c : candidates) {
    const double a = horizon_angle(points[anchor], points[c], center);
    if (a >= threshold) set.members.push_back(HorizonMember{c, a});
  }
  return set;
}

// Iteratively extracts horizon points: the candidate subtending the largest
// horizon angle at the current anchor becomes the next anchor (ties prefer
// the larger radius, then the smaller index).  After each extraction the
// whole remaining pool is re-screened against the new anchor with the
// terminal unchanged: a candidate below one anchor's horizon can rise above
// the next anchor's.  The walk stops when no candidate exceeds the
// anchor-to-terminal angle.  Exact duplicates of the current anchor leave
// the pool for good; the smaller index was extracted first, so nothing is
// lost.
inline HorizonPointSequence extract_horizon_points(std::size_t anchor, std::size_t terminal,
                                                   std::vector<std::size_t> pool,
                                                   const std::vector<PolarView>& polar,
                                                   const std::vector<Point>& points,
                                                   const Center& center) {
  HorizonPointSequence seq;
  while (!pool.empty()) {
    const double threshold = horizon_angle(points[anchor], points[terminal], center);
    std::vector<std::size_t> kept;
    kept.reserve(pool.size());
    bool have_best = false;
    std::size_t best = 0;
    double best_angle = 0.0;
    for (std::size_t c : pool) {
      if (detail::same_coords(points[c], points[anchor])) continue;  // spent duplicate
      kept.push_back(c);
      const double a = horizon_angle(points[anchor], points[c], center);
      if (a < threshold) continue;
      const bool better =
          !have_best || a > best_angle ||
          (a == best_angle && (polar[c].r > polar[best].r ||
                               (polar[c].r == polar[best].r && c < best)));
      if (better) {
        have_best = true;
        best = c;
        best_angle = a;
      }
    }
    pool = std::move(kept);
    if (!have_best || best_angle <= threshold) break;
    seq.points.push_back(best);
    anchor = best;
    pool.erase(std::find(pool.begin(), pool.end(), best));
  }
  return seq;
}

// Walks an already-filtered horizon set.
inline HorizonPointSequence extract_horizon_points(const HorizonSet& set,
                                                   const std::vector<PolarView>& polar,
                                                   const std::vector<Point>& points,
                                                   const Center& center) {
  std::vector<std::size_t> pool;
  pool.reserve(set.members.size());
  for (const HorizonMember& m : set.members) pool.push_back(m.index);
  return extract_horizon_points(set.anchor, set.terminal, std::move(pool), polar, points, center);
}

namespace detail {

// Indices of one occupancy bin whose theta lies strictly inside (lo, hi);
// the bin is ordered by (theta, index).  Accepts everything when lo/hi are
// outside the bin's range.
inline void gather_open_range(const std::vector<std::size_t>& occ,
                              const std::vector<PolarView>& polar, double lo, double hi,
                              std::size_t skip_a, std::size_t skip_b,
                              std::vector<std::size_t>& out) {
  auto begin = std::upper_bound(occ.begin(), occ.end(), lo, [&](double value, std::size_t idx) {
    return value < polar[idx].theta;
  });
  for (auto it = begin; it != occ.end() && polar[*it].theta < hi; ++it) {
    if (*it != skip_a && *it != skip_b) out.push_back(*it);
  }
}

}  // namespace detail

// Runs the horizon step for every cyclically consecutive pair of fence
// entries: candidates are gathered per spanned bin from the occupancy lists
// and reduced by the extraction walk.  Returns the ascending union of all
// extracted points.  `candidate_total`,
// when given, receives the summed candidate-list lengths (at most n, since
// the open wedges are disjoint).
inline std::vector<std::size_t> horizon_computation(const BinTable& table,
                                                    const FencePointList& fence,
                                                    const std::vector<PolarView>& polar,
                                                    const std::vector<Point>& points,
                                                    const Center& center,
                                                    WorkTally* tally = nullptr,
                                                    std::size_t* candidate_total = nullptr) {
  std::vector<std::size_t> result;
  const std::size_t k = fence.entries.size();
  if (k < 2 || !table.has_occupancy) return result;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < k; ++i) {
    const FenceEntry& a = fence.entries[i];
    const FenceEntry& b = fence.entries[(i + 1) % k];
    const std::size_t bin_a = table.config.bin_of(a.theta);
    const std::size_t bin_b = table.config.bin_of(b.theta);
    const bool wraps = b.theta <= a.theta;  // the closing pair
    std::size_t span = 0;
    if (!wraps) {
      span = bin_b - bin_a + 1;
    } else {
      span = table.config.bin_count - bin_a + bin_b + 1;
    }

    candidates.clear();
    std::size_t bin = bin_a;
    for (std::size_t s = 0; s < span; ++s, bin = (bin + 1) % table.config.bin_count) {
      // First and last visit clip to the wedge rays; interior visits take the
      // whole bin.  A wrapping single-bin wedge visits that bin twice, once
      // per clipped side.
      const double lo = s == 0 ? a.theta : -inf;
      const double hi = s + 1 == span ? b.theta : inf;
      detail::gather_open_range(table.occupancy[bin], polar, lo, hi, a.index, b.index,
                                candidates);
    }
    if (tally != nullptr) tally->horizon += candidates.size();
    if (candidate_total != nullptr) *candidate_total += candidates.size();
    if (candidates.empty()) continue;

    const HorizonPointSequence seq =
        extract_horizon_points(a.index, b.index, candidates, polar, points, center);
    result.insert(result.end(), seq.points.begin(), seq.points.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace polarhull
