#pragma once

#include <cmath>

// Adaptive-precision sign of the 2x2 orientation determinant.
//
// The determinant (bx-ax)*(cy-ay) - (by-ay)*(cx-ax) is first evaluated in
// plain double arithmetic together with a forward error bound.  When the
// magnitude of the result clears the bound the sign is already certain and we
// return immediately; otherwise the computation is repeated with error-free
// transformations (two_sum / two_product expansions) until the sign is exact.
// The staged escalation follows the classic adaptive formulation of robust
// predicates; products use std::fma, which yields the exact residual of a
// double multiplication.  This file must be compiled without floating-point
// contraction.

namespace polarhull::detail {

inline constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
inline constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
inline constexpr double kErrBoundA = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kErrBoundB = (2.0 + 12.0 * kEps) * kEps;
inline constexpr double kErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bvirt = x - a;
  const double avirt = x - bvirt;
  y = (a - avirt) + (b - bvirt);
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
  // requires |a| >= |b|
  x = a + b;
  y = b - (x - a);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  y = (a - avirt) + (bvirt - b);
}

// Tail of a - b when the rounded difference x is already known.
inline double two_diff_tail(double a, double b, double x) {
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  return (a - avirt) + (bvirt - b);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
  double i;
  two_diff(a0, b, i, x0);
  two_sum(a1, i, x2, x1);
}

// (a1,a0) - (b1,b0) as a four-term expansion x3..x0.
inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3, double& x2,
                         double& x1, double& x0) {
  double j, r0;
  two_one_diff(a1, a0, b0, j, r0, x0);
  two_one_diff(j, r0, b1, x3, x2, x1);
}

// Merges two nonoverlapping expansions into one, dropping zero components.
// Returns the length of h.  e and f are read in order of increasing
// magnitude, so the invariants of the running fast_two_sum are preserved.
inline int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f,
                                       double* h) {
  int eindex = 0;
  int findex = 0;
  int hindex = 0;
  double q;
  auto e_next_smaller = [&] {
    if (eindex >= elen) return false;
    if (findex >= flen) return true;
    return std::fabs(e[eindex]) <= std::fabs(f[findex]);
  };
  if (e_next_smaller()) {
    q = e[eindex++];
  } else {
    q = f[findex++];
  }
  bool first = true;
  while (eindex < elen || findex < flen) {
    const double now = e_next_smaller() ? e[eindex++] : f[findex++];
    double qnew, hh;
    if (first) {
      fast_two_sum(now, q, qnew, hh);
      first = false;
    } else {
      two_sum(q, now, qnew, hh);
    }
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  if (q != 0.0 || hindex == 0) h[hindex++] = q;
  return hindex;
}

inline double orient_adapt(double ax, double ay, double bx, double by, double cx, double cy,
                           double detsum) {
  const double acx = ax - cx;
  const double bcx = bx - cx;
  const double acy = ay - cy;
  const double bcy = by - cy;

  double detleft, detlefttail, detright, detrighttail;
  two_product(acx, bcy, detleft, detlefttail);
  two_product(acy, bcx, detright, detrighttail);

  double b[4];
  two_two_diff(detleft, detlefttail, detright, detrighttail, b[3], b[2], b[1], b[0]);

  double det = b[0] + b[1] + b[2] + b[3];
  double errbound = kErrBoundB * detsum;
  if (det >= errbound || -det >= errbound) return det;

  const double acxtail = two_diff_tail(ax, cx, acx);
  const double bcxtail = two_diff_tail(bx, cx, bcx);
  const double acytail = two_diff_tail(ay, cy, acy);
  const double bcytail = two_diff_tail(by, cy, bcy);
  if (acxtail == 0.0 && acytail == 0.0 && bcxtail == 0.0 && bcytail == 0.0) return det;

  errbound = kErrBoundC * detsum + kResultErrBound * std::fabs(det);
  det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
  if (det >= errbound || -det >= errbound) return det;

  double s1, s0, t1, t0, u[4];
  two_product(acxtail, bcy, s1, s0);
  two_product(acytail, bcx, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double c1[8];
  const int c1len = fast_expansion_sum_zeroelim(4, b, 4, u, c1);

  two_product(acx, bcytail, s1, s0);
  two_product(acy, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double c2[12];
  const int c2len = fast_expansion_sum_zeroelim(c1len, c1, 4, u, c2);

  two_product(acxtail, bcytail, s1, s0);
  two_product(acytail, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double d[16];
  const int dlen = fast_expansion_sum_zeroelim(c2len, c2, 4, u, d);

  return d[dlen - 1];
}

// Sign-exact orientation determinant: positive when (ax,ay), (bx,by), (cx,cy)
// wind counter-clockwise, negative when clockwise, zero when collinear.
inline double orient_det(double ax, double ay, double bx, double by, double cx, double cy) {
  const double detleft = (ax - cx) * (by - cy);
  const double detright = (ay - cy) * (bx - cx);
  const double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det;
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det;
    detsum = -detleft - detright;
  } else {
    return det;
  }
  const double errbound = kErrBoundA * detsum;
  if (det >= errbound || -det >= errbound) return det;
  return orient_adapt(ax, ay, bx, by, cx, cy, detsum);
}

}  // namespace polarhull::detail
