#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "polarhull/errors.hpp"
#include "polarhull/fence.hpp"
#include "polarhull/geometry.hpp"

namespace polarhull {

namespace detail {

// Lexicographic (|dx|, |dy|) distance order along a common ray from `origin`;
// exact whenever the coordinate differences are exact, which is all we need
// to order collinear points.
inline bool nearer_on_ray(const Point& origin, const Point& a, const Point& b) {
  const double adx = std::fabs(a.x - origin.x), ady = std::fabs(a.y - origin.y);
  const double bdx = std::fabs(b.x - origin.x), bdy = std::fabs(b.y - origin.y);
  if (adx != bdx) return adx < bdx;
  return ady < bdy;
}

// Rank of a point collinear with the pivot, by angle: coincident with the
// pivot, then angle 0 (right), then interior angles, then angle pi (left).
// The pivot has minimal y, so collinear points never lie below it.
inline int pivot_ray_class(const Point& pivot, const Point& p) {
  const double dx = p.x - pivot.x;
  const double dy = p.y - pivot.y;
  if (dx == 0.0 && dy == 0.0) return 0;
  if (dy == 0.0) return dx > 0.0 ? 1 : 3;
  return 2;
}

}  // namespace detail

// Classic Graham scan over `subset` (original point indices).  Duplicate
// coordinates keep the smallest index; the result is canonical.
inline Hull graham_scan(const std::vector<Point>& points,
                        const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw EmptyInput();
  if (subset.size() <= 2) return canonicalize_hull(subset, points);

  // Pivot: lowest y, then lowest x, then lowest index.
  std::size_t pivot = subset[0];
  for (std::size_t idx : subset) {
    const Point& p = points[idx];
    const Point& q = points[pivot];
    if (p.y < q.y || (p.y == q.y && (p.x < q.x || (p.x == q.x && idx < pivot)))) pivot = idx;
  }

  std::vector<std::size_t> order;
  order.reserve(subset.size() - 1);
  for (std::size_t idx : subset)
    if (idx != pivot) order.push_back(idx);

  const Point& pv = points[pivot];
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Point& a = points[i];
    const Point& b = points[j];
    const Orientation o = orientation(pv, a, b);
    if (o == Orientation::CounterClockwise) return true;
    if (o == Orientation::Clockwise) return false;
    if (detail::same_coords(a, b)) return i < j;
    const int ca = detail::pivot_ray_class(pv, a);
    const int cb = detail::pivot_ray_class(pv, b);
    if (ca != cb) return ca < cb;
    if (detail::nearer_on_ray(pv, a, b)) return true;
    if (detail::nearer_on_ray(pv, b, a)) return false;
    return i < j;
  });

  std::vector<std::size_t> st;
  st.reserve(order.size() + 1);
  st.push_back(pivot);
  for (std::size_t idx : order) {
    if (detail::same_coords(points[idx], points[st.back()])) continue;  // keep first index
    while (st.size() >= 2 &&
           orientation(points[st[st.size() - 2]], points[st.back()], points[idx]) !=
               Orientation::CounterClockwise) {
      st.pop_back();
    }
    st.push_back(idx);
  }
  return canonicalize_hull(st, points);
}

inline Hull graham_scan(const std::vector<Point>& points) {
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return graham_scan(points, all);
}

// Gift wrapping over `subset`.  Each step picks the most clockwise candidate;
// collinear ties go to the farther point, exact coordinate ties to the
// smaller index.
inline Hull jarvis_march(const std::vector<Point>& points,
                         const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw EmptyInput();
  if (subset.size() <= 2) return canonicalize_hull(subset, points);

  std::size_t start = subset[0];
  for (std::size_t idx : subset) {
    const Point& p = points[idx];
    const Point& q = points[start];
    if (detail::lex_less(p, q) || (detail::same_coords(p, q) && idx < start)) start = idx;
  }

  std::vector<std::size_t> ring;
  std::size_t cur = start;
  const std::size_t cap = subset.size() + 2;
  do {
    ring.push_back(cur);
    if (ring.size() > cap) throw Error("gift wrapping failed to close the ring");
    bool have_best = false;
    std::size_t best = 0;
    for (std::size_t c : subset) {
      if (detail::same_coords(points[c], points[cur])) continue;  // zero-length edge
      if (!have_best) {
        have_best = true;
        best = c;
        continue;
      }
      const Orientation o = orientation(points[cur], points[best], points[c]);
      if (o == Orientation::Clockwise) {
        best = c;
      } else if (o == Orientation::Collinear) {
        if (detail::same_coords(points[best], points[c])) {
          if (c < best) best = c;
        } else if (detail::nearer_on_ray(points[cur], points[best], points[c])) {
          best = c;  // farther along the ray wins
        }
      }
    }
    if (!have_best) break;  // every point shares cur's coordinates
    cur = best;
  } while (cur != start);
  return canonicalize_hull(ring, points);
}

inline Hull jarvis_march(const std::vector<Point>& points) {
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return jarvis_march(points, all);
}

// Final construction over a convexity-enforced contour: the entries are
// already in angular order about the center, so one anchored cyclic sweep
// suffices.
inline Hull contour_scan_hull(const FencePointList& fence, const std::vector<Point>& points) {
  std::vector<std::size_t> ring;
  ring.reserve(fence.entries.size());
  for (const FenceEntry& e : fence.entries) ring.push_back(e.index);
  if (ring.size() >= 3) ring = detail::anchored_cyclic_sweep(ring, points);
  return canonicalize_hull(ring, points);
}

// Quadratic-per-edge reference construction: a directed edge (a, b) is kept
// iff every other point lies strictly to its left or strictly inside the
// segment.  Intended for verification; refuses oversized inputs.
inline Hull brute_force_hull(const std::vector<Point>& points) {
  if (points.empty()) throw EmptyInput();
  if (points.size() > 5000) throw ConfigError("reference construction limited to 5000 points");

  // Unique coordinates, smallest index representative.
  std::vector<std::size_t> uniq(points.size());
  std::iota(uniq.begin(), uniq.end(), std::size_t{0});
  std::sort(uniq.begin(), uniq.end(), [&](std::size_t i, std::size_t j) {
    if (points[i].x != points[j].x) return points[i].x < points[j].x;
    if (points[i].y != points[j].y) return points[i].y < points[j].y;
    return i < j;
  });
  uniq.erase(std::unique(uniq.begin(), uniq.end(),
                         [&](std::size_t i, std::size_t j) {
                           return detail::same_coords(points[i], points[j]);
                         }),
             uniq.end());

  const std::size_t k = uniq.size();
  if (k <= 2) return canonicalize_hull(uniq, points);

  auto strictly_inside_segment = [&](const Point& a, const Point& b, const Point& c) {
    // Pre: a, b, c collinear, c distinct from both.
    const double lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
    const double loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
    if (a.x != b.x) return lox < c.x && c.x < hix;
    return loy < c.y && c.y < hiy;
  };

  std::vector<std::size_t> next(points.size(), SIZE_MAX);
  for (std::size_t ai = 0; ai < k; ++ai) {
    for (std::size_t bi = 0; bi < k; ++bi) {
      if (ai == bi) continue;
      const Point& a = points[uniq[ai]];
      const Point& b = points[uniq[bi]];
      bool good = true;
      for (std::size_t ci = 0; ci < k && good; ++ci) {
        if (ci == ai || ci == bi) continue;
        const Point& c = points[uniq[ci]];
        const Orientation o = orientation(a, b, c);
        if (o == Orientation::Clockwise) good = false;
        else if (o == Orientation::Collinear && !strictly_inside_segment(a, b, c)) good = false;
      }
      if (good) {
        next[uniq[ai]] = uniq[bi];
        break;
      }
    }
  }

  const std::size_t startpos = uniq[0];  // lexicographic minimum is always a vertex
  std::vector<std::size_t> ring;
  std::size_t cur = startpos;
  do {
    ring.push_back(cur);
    if (ring.size() > k) throw Error("reference construction failed to close the ring");
    cur = next[cur];
    if (cur == SIZE_MAX) throw Error("reference construction lost the boundary");
  } while (cur != startpos);
  return canonicalize_hull(ring, points);
}

}  // namespace polarhull
