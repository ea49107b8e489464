#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polarhull/errors.hpp"
#include "polarhull/geometry.hpp"
#include "polarhull/instrumentation.hpp"

namespace polarhull {

// Smallest supported bin interval, in radians.
inline constexpr double kMinBinInterval = 9.5367431640625e-07;  // 2^-20

struct BinConfig {
  double interval = 0.0;  // radians
  std::size_t bin_count = 0;

  static BinConfig from_interval(double interval) {
    if (!(interval > 0.0) || interval > std::numbers::pi / 2.0) {
      throw ConfigError("bin interval must be in (0, pi/2] radians");
    }
    BinConfig cfg;
    cfg.interval = interval;
    cfg.bin_count = static_cast<std::size_t>(std::ceil(kTwoPi / interval));
    return cfg;
  }

  std::size_t bin_of(double theta) const {
    const std::size_t b = static_cast<std::size_t>(theta / interval);
    return b < bin_count ? b : bin_count - 1;
  }
};

// The points of one bin that attain its maximum radius.  Exact ties are all
// retained, in increasing index order.
struct MaximalBinPointSet {
  std::size_t bin_index = 0;
  double max_r = 0.0;
  std::vector<std::size_t> point_indices;
};

// Up to eight indices: for each coordinate extreme (min x, max x, min y,
// max y), the two endpoints of the tie run, i.e. among the points attaining
// the extreme the ones minimizing and maximizing the other coordinate.
struct BoundaryPoints {
  std::vector<std::size_t> indices;  // distinct, ascending
};

struct BinTable {
  BinConfig config;
  std::vector<MaximalBinPointSet> bins;
  // Per-bin point indices ordered by (theta, index); empty unless requested.
  std::vector<std::vector<std::size_t>> occupancy;
  bool has_occupancy = false;
  BoundaryPoints boundary;
};

// Single pass over the polar views: assigns every point to the bin
// floor(theta / interval) (clamped to the last bin) and maintains the
// maximal point set of each bin.
inline BinTable assign_bins(const std::vector<PolarView>& polar, const BinConfig& config,
                            bool keep_occupancy, WorkTally* tally = nullptr) {
  BinTable table;
  table.config = config;
  table.bins.resize(config.bin_count);
  for (std::size_t b = 0; b < config.bin_count; ++b) table.bins[b].bin_index = b;
  table.has_occupancy = keep_occupancy;
  if (keep_occupancy) table.occupancy.resize(config.bin_count);

  for (const PolarView& v : polar) {
    const std::size_t b = config.bin_of(v.theta);
    MaximalBinPointSet& m = table.bins[b];
    if (m.point_indices.empty() || v.r > m.max_r) {
      m.max_r = v.r;
      m.point_indices.assign(1, v.index);
    } else if (v.r == m.max_r) {
      m.point_indices.push_back(v.index);
    }
    if (keep_occupancy) table.occupancy[b].push_back(v.index);
  }
  for (auto& m : table.bins) std::sort(m.point_indices.begin(), m.point_indices.end());
  if (keep_occupancy) {
    for (auto& occ : table.occupancy) {
      std::sort(occ.begin(), occ.end(), [&](std::size_t a, std::size_t b) {
        if (polar[a].theta != polar[b].theta) return polar[a].theta < polar[b].theta;
        return a < b;
      });
    }
  }
  if (tally != nullptr) tally->binning += polar.size();
  return table;
}

// One linear scan for the coordinate extremes.  Exact ties on both
// coordinates resolve to the smallest index.
inline BoundaryPoints compute_boundary_points(const std::vector<Point>& points,
                                              WorkTally* tally = nullptr) {
  if (points.empty()) throw EmptyInput();
  // slot = (extreme coordinate, endpoint of the tie run by the other axis)
  std::size_t slots[8];
  for (auto& s : slots) s = 0;
  auto consider = [&](std::size_t slot, std::size_t i, double primary, double best_primary,
                      bool primary_min, double secondary, double best_secondary,
                      bool secondary_min) {
    const std::size_t j = slots[slot];
    if (primary_min ? primary < best_primary : primary > best_primary) {
      slots[slot] = i;
    } else if (primary == best_primary) {
      if (secondary_min ? secondary < best_secondary : secondary > best_secondary) {
        slots[slot] = i;
      } else if (secondary == best_secondary && i < j) {
        slots[slot] = i;
      }
    }
  };
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point& p = points[i];
    const Point& minx_lo = points[slots[0]];
    consider(0, i, p.x, minx_lo.x, true, p.y, minx_lo.y, true);
    const Point& minx_hi = points[slots[1]];
    consider(1, i, p.x, minx_hi.x, true, p.y, minx_hi.y, false);
    const Point& maxx_lo = points[slots[2]];
    consider(2, i, p.x, maxx_lo.x, false, p.y, maxx_lo.y, true);
    const Point& maxx_hi = points[slots[3]];
    consider(3, i, p.x, maxx_hi.x, false, p.y, maxx_hi.y, false);
    const Point& miny_lo = points[slots[4]];
    consider(4, i, p.y, miny_lo.y, true, p.x, miny_lo.x, true);
    const Point& miny_hi = points[slots[5]];
    consider(5, i, p.y, miny_hi.y, true, p.x, miny_hi.x, false);
    const Point& maxy_lo = points[slots[6]];
    consider(6, i, p.y, maxy_lo.y, false, p.x, maxy_lo.x, true);
    const Point& maxy_hi = points[slots[7]];
    consider(7, i, p.y, maxy_hi.y, false, p.x, maxy_hi.x, false);
  }
  BoundaryPoints out;
  for (std::size_t s : slots) out.indices.push_back(points[s].index);
  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()), out.indices.end());
  if (tally != nullptr) tally->boundary += points.size();
  return out;
}

// Rebins from scratch at half the interval.  The result is identical to a
// fresh assign_bins at interval / 2.
inline BinTable halve_interval(const BinTable& table, const std::vector<PolarView>& polar,
                               WorkTally* tally = nullptr) {
  const double next = table.config.interval * 0.5;
  if (next < kMinBinInterval) {
    throw IntervalUnderflow("bin interval below 2^-20 radians");
  }
  BinTable out = assign_bins(polar, BinConfig::from_interval(next), table.has_occupancy, tally);
  out.boundary = table.boundary;
  return out;
}

// Union of all maximal bin point sets, ascending and duplicate-free.
inline std::vector<std::size_t> maximal_union(const BinTable& table) {
  std::vector<std::size_t> u;
  for (const auto& m : table.bins) u.insert(u.end(), m.point_indices.begin(), m.point_indices.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

}  // namespace polarhull
