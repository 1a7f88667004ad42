#pragma once

#include <span>

#include "polysel/config.hpp"
#include "polysel/errors.hpp"

namespace polysel {

/// Nonempty compact real interval [lo, hi].
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double tol) const {
    return x >= lo - tol && x <= hi + tol;
  }
};

/// Sign-aware scaled interval sum [u, v] with
///   u = sum_i (L_i > 0 ? L_i*lo_i : L_i*hi_i),
///   v = sum_i (L_i > 0 ? L_i*hi_i : L_i*lo_i).
/// This is the Minkowski sum of the scaled intervals L_i * [lo_i, hi_i];
/// u <= v always. An exactly zero L_i contributes [0, 0].
Interval scaled_sum(std::span<const double> coeffs,
                    std::span<const Interval> intervals);

/// True iff max(a.lo, b.lo) <= min(a.hi, b.hi) + tol.
bool intersects(const Interval& a, const Interval& b, double tol);

/// Distance between the intervals: positive when they are disjoint, 0 when
/// they intersect.
double gap(const Interval& a, const Interval& b);

}  // namespace polysel
