#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "polarhull/binning.hpp"
#include "polarhull/errors.hpp"
#include "polarhull/geometry.hpp"
#include "polarhull/instrumentation.hpp"

namespace polarhull {

enum class FenceSource { MaximalBin, Boundary, Horizon };

struct FenceEntry {
  std::size_t index = 0;
  double theta = 0.0;
  FenceSource source = FenceSource::MaximalBin;
};

// Angle-ordered list of reduction candidates.  Entries are strictly
// increasing in theta and no point index appears twice.
struct FencePointList {
  std::vector<FenceEntry> entries;
};

// Merges the maximal bin points, boundary points and horizon points into one
// angle-ordered fence.  A point contributed by several sources keeps the
// highest-priority tag (maximal, then boundary, then horizon).  Entries with
// exactly equal theta collapse to the one with the largest radius, ties to
// the smallest index.
inline FencePointList build_fence(const std::vector<std::size_t>& maximal,
                                  const BoundaryPoints& boundary,
                                  const std::vector<std::size_t>& horizon,
                                  const std::vector<PolarView>& polar,
                                  WorkTally* tally = nullptr) {
  std::unordered_map<std::size_t, FenceSource> tag;
  tag.reserve(maximal.size() + boundary.indices.size() + horizon.size());
  for (std::size_t i : maximal) tag.emplace(i, FenceSource::MaximalBin);
  for (std::size_t i : boundary.indices) tag.emplace(i, FenceSource::Boundary);
  for (std::size_t i : horizon) tag.emplace(i, FenceSource::Horizon);
  if (tag.empty()) throw EmptyFence();

  // Polar views are stored at the position matching their point index.
  std::vector<FenceEntry> entries;
  entries.reserve(tag.size());
  for (const auto& [idx, src] : tag) entries.push_back(FenceEntry{idx, polar[idx].theta, src});
  std::sort(entries.begin(), entries.end(), [&](const FenceEntry& a, const FenceEntry& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    if (polar[a.index].r != polar[b.index].r) return polar[a.index].r > polar[b.index].r;
    return a.index < b.index;
  });
  FencePointList fence;
  fence.entries.reserve(entries.size());
  for (const FenceEntry& e : entries) {
    if (fence.entries.empty() || fence.entries.back().theta != e.theta) fence.entries.push_back(e);
  }
  if (tally != nullptr) tally->fencing += fence.entries.size();
  return fence;
}

// Removes every fence point that fails the convexity property against its
// cyclic neighbors, i.e. does not form a strictly counter-clockwise turn in
// the angle-ordered traversal about the center.  Collinear points are
// removed as well.  Removal cascades through the usual Graham stack
// discipline, anchored at the minimum-theta entry (the farthest point, which
// is provably on the hull and never removed).  Fences with fewer than three
// entries pass through unchanged.
inline FencePointList enforce_convexity(const FencePointList& fence,
                                        const std::vector<Point>& points, const Center& center) {
  (void)center;  // the traversal frame; entries arrive ordered about it
  if (fence.entries.size() < 3) return fence;
  std::vector<std::size_t> ring;
  ring.reserve(fence.entries.size());
  for (const FenceEntry& e : fence.entries) ring.push_back(e.index);
  const std::vector<std::size_t> kept = detail::anchored_cyclic_sweep(ring, points);

  FencePointList out;
  out.entries.reserve(kept.size());
  std::size_t k = 0;
  for (const FenceEntry& e : fence.entries) {
    if (k < kept.size() && e.index == kept[k]) {
      out.entries.push_back(e);
      ++k;
    }
  }
  return out;
}

}  // namespace polarhull
