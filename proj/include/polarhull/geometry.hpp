#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "polarhull/errors.hpp"
#include "polarhull/parallel.hpp"
#include "polarhull/predicates.hpp"

namespace polarhull {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A dataset point.  `index` is the point's ordinal in the dataset; hulls and
// reduction stages refer to points exclusively through these indices.
struct Point {
  double x = 0.0;
  double y = 0.0;
  std::size_t index = 0;
};

// Arithmetic mean of the dataset coordinates; the polar origin.
struct Center {
  double x = 0.0;
  double y = 0.0;
};

// Polar coordinates of one point about the center, in a frame rotated so the
// farthest point of the dataset sits at theta == 0.  `frame_offset` is the
// raw angle of that farthest point and is shared by every view of a dataset.
// Points coincident with the center carry r == 0, theta == 0; they are
// interior by construction and never extremal.
struct PolarView {
  double r = 0.0;
  double theta = 0.0;
  std::size_t index = 0;
  double frame_offset = 0.0;
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

// Canonical convex hull: vertex indices in counter-clockwise order, no three
// consecutive vertices collinear, first vertex lexicographically smallest by
// (x, y).  Two hulls are equal exactly when their vertex vectors are equal.
struct Hull {
  std::vector<std::size_t> vertices;
  bool operator==(const Hull&) const = default;
};

namespace detail {

// Left-to-right pairwise summation; deterministic for a fixed input order.
template <class Get>
double pairwise_sum(std::size_t lo, std::size_t hi, const Get& get) {
  const std::size_t n = hi - lo;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += get(i);
    return s;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum(lo, mid, get) + pairwise_sum(mid, hi, get);
}

inline double normalize_angle(double t) {
  while (t < 0.0) t += kTwoPi;
  while (t >= kTwoPi) t -= kTwoPi;
  return t;
}

inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline bool same_coords(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

}  // namespace detail

// Sign of the cross product (b - a) x (c - a): exact for every input whose
// true determinant is representable, via staged adaptive evaluation.
inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const double det = detail::orient_det(a.x, a.y, b.x, b.y, c.x, c.y);
  if (det > 0.0) return Orientation::CounterClockwise;
  if (det < 0.0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

inline Center compute_center(const std::vector<Point>& points) {
  if (points.empty()) throw EmptyInput();
  const double n = static_cast<double>(points.size());
  const double sx = detail::pairwise_sum(0, points.size(), [&](std::size_t i) { return points[i].x; });
  const double sy = detail::pairwise_sum(0, points.size(), [&](std::size_t i) { return points[i].y; });
  return Center{sx / n, sy / n};
}

// Polar transform about `center`, rotated so the farthest point (ties broken
// by smallest index) has theta == 0.  Honors POLARHULL_THREADS; the result is
// identical at any worker count.
inline std::vector<PolarView> to_polar(const std::vector<Point>& points, const Center& center) {
  if (points.empty()) throw EmptyInput();
  std::vector<PolarView> views(points.size());
  const unsigned workers = worker_count_from_env();
  parallel_for(0, points.size(), workers, [&](std::size_t i) {
    const double dx = points[i].x - center.x;
    const double dy = points[i].y - center.y;
    PolarView& v = views[i];
    v.index = points[i].index;
    v.r = std::hypot(dx, dy);
    v.theta = (dx == 0.0 && dy == 0.0) ? 0.0 : detail::normalize_angle(std::atan2(dy, dx));
  });

  std::size_t far = 0;
  for (std::size_t i = 1; i < views.size(); ++i) {
    if (views[i].r > views[far].r) far = i;
  }
  if (views[far].r == 0.0) throw DegenerateDataset("all points coincide with the center");

  const double offset = views[far].theta;
  parallel_for(0, views.size(), workers, [&](std::size_t i) {
    PolarView& v = views[i];
    v.frame_offset = offset;
    v.theta = v.r == 0.0 ? 0.0 : detail::normalize_angle(v.theta - offset);
  });
  views[far].theta = 0.0;
  return views;
}

// Inverse of to_polar for one view (used to validate the transform).
inline Point from_polar(const PolarView& v, const Center& center) {
  const double t = v.theta + v.frame_offset;
  return Point{center.x + v.r * std::cos(t), center.y + v.r * std::sin(t), v.index};
}

// Interior angle at `anchor` between the leg to the center and the leg to
// `p`, in [0, pi].  Both legs must have nonzero length, except that p sitting
// exactly on the center yields 0 (the legs coincide).
inline double horizon_angle(const Point& anchor, const Point& p, const Center& center) {
  const double ux = center.x - anchor.x;
  const double uy = center.y - anchor.y;
  if (ux == 0.0 && uy == 0.0) throw ZeroLengthLeg("anchor coincides with the center");
  const double vx = p.x - anchor.x;
  const double vy = p.y - anchor.y;
  if (vx == 0.0 && vy == 0.0) throw ZeroLengthLeg("query point coincides with the anchor");
  const double cross = ux * vy - uy * vx;
  const double dot = ux * vx + uy * vy;
  return std::atan2(std::fabs(cross), dot);
}

namespace detail {

// Linear Graham-style pass over `ring` (already rotated so ring[0] is a
// guaranteed hull vertex): pops every vertex that does not make a strictly
// counter-clockwise turn, then closes the cycle against ring[0].
inline std::vector<std::size_t> anchored_cyclic_sweep(const std::vector<std::size_t>& ring,
                                                      const std::vector<Point>& points) {
  if (ring.size() < 3) return ring;
  std::vector<std::size_t> stack;
  stack.reserve(ring.size());
  stack.push_back(ring[0]);
  for (std::size_t i = 1; i < ring.size(); ++i) {
    while (stack.size() >= 2 &&
           orientation(points[stack[stack.size() - 2]], points[stack.back()], points[ring[i]]) !=
               Orientation::CounterClockwise) {
      stack.pop_back();
    }
    stack.push_back(ring[i]);
  }
  while (stack.size() >= 3 &&
         orientation(points[stack[stack.size() - 2]], points[stack.back()], points[stack[0]]) !=
             Orientation::CounterClockwise) {
    stack.pop_back();
  }
  return stack;
}

}  // namespace detail

// Normalizes a convex ring (possibly clockwise, possibly with duplicate or
// collinear-run vertices) into the canonical Hull form.
inline Hull canonicalize_hull(const std::vector<std::size_t>& vertices,
                              const std::vector<Point>& points) {
  if (vertices.empty()) throw EmptyHull();

  // Collapse duplicate coordinates, keeping the smallest index and the first
  // ring position of each distinct location.
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point& pa = points[vertices[a]];
    const Point& pb = points[vertices[b]];
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return vertices[a] < vertices[b];
  });
  std::vector<std::size_t> keep_index(vertices.size());  // ring pos -> canonical index
  std::vector<char> is_first(vertices.size(), 0);
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::size_t first_pos = order[i];
    while (j < order.size() &&
           detail::same_coords(points[vertices[order[j]]], points[vertices[order[i]]])) {
      first_pos = std::min(first_pos, order[j]);
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) keep_index[order[k]] = vertices[order[i]];
    is_first[first_pos] = 1;
    i = j;
  }
  std::vector<std::size_t> ring;
  ring.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (is_first[i]) ring.push_back(keep_index[i]);
  }

  if (ring.size() == 1) return Hull{ring};
  if (ring.size() == 2) {
    if (!detail::lex_less(points[ring[0]], points[ring[1]])) std::swap(ring[0], ring[1]);
    return Hull{ring};
  }

  // Ring orientation = sign of the first non-collinear consecutive triple.
  Orientation turn = Orientation::Collinear;
  for (std::size_t i = 0; i < ring.size() && turn == Orientation::Collinear; ++i) {
    turn = orientation(points[ring[i]], points[ring[(i + 1) % ring.size()]],
                       points[ring[(i + 2) % ring.size()]]);
  }
  if (turn == Orientation::Collinear) {
    // Fully flat ring: keep the two lexicographic extremes.
    std::size_t lo = ring[0], hi = ring[0];
    for (std::size_t idx : ring) {
      if (detail::lex_less(points[idx], points[lo])) lo = idx;
      if (detail::lex_less(points[hi], points[idx])) hi = idx;
    }
    return Hull{{lo, hi}};
  }
  if (turn == Orientation::Clockwise) std::reverse(ring.begin(), ring.end());

  // Rotate the lexicographic minimum (a strict hull vertex) to the front and
  // strip collinear interior-of-edge vertices.
  std::size_t min_pos = 0;
  for (std::size_t i = 1; i < ring.size(); ++i) {
    if (detail::lex_less(points[ring[i]], points[ring[min_pos]])) min_pos = i;
  }
  std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(min_pos), ring.end());
  std::vector<std::size_t> out = detail::anchored_cyclic_sweep(ring, points);
  if (out.size() == 2 && !detail::lex_less(points[out[0]], points[out[1]])) {
    std::swap(out[0], out[1]);
  }
  return Hull{out};
}

// True when q lies inside or on the boundary of the hull.
inline bool hull_contains(const Hull& hull, const std::vector<Point>& points, const Point& q) {
  const auto& v = hull.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return detail::same_coords(points[v[0]], q);
  if (v.size() == 2) {
    if (orientation(points[v[0]], points[v[1]], q) != Orientation::Collinear) return false;
    const Point& a = points[v[0]];
    const Point& b = points[v[1]];
    return q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
           q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orientation(points[v[i]], points[v[(i + 1) % v.size()]], q) == Orientation::Clockwise) {
      return false;
    }
  }
  return true;
}

}  // namespace polarhull
