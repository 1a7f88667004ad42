#pragma once

#include <optional>

#include "polysel/separation.hpp"
#include "polysel/setvalued.hpp"

namespace polysel {

struct ConvexityCounterexample {
  TupleIndices indices;
  double defect = 0.0;
};

struct ConvexityReport {
  bool holds = false;
  std::optional<ConvexityCounterexample> counterexample;
};

/// n-convexity on the grid: for every strict (n+2)-tuple,
///   (-1)^n f(x_0) <= (-1)^n sum_i c_i(x_0; x_1..x_{n+1}) f(x_i)
/// within tol.decision. The counterexample is the lexicographically first
/// failing tuple; defect is the violated margin.
ConvexityReport is_n_convex(const SampledFn& f, int degree,
                            const Tolerances& tol = {});

/// f is n-concave iff -f is n-convex.
ConvexityReport is_n_concave(const SampledFn& f, int degree,
                             const Tolerances& tol = {});

/// Largest deviation of f from its (n+1)-point Lagrange extrapolations:
///   eps* = max over strict tuples of |f(x_0) - sum_i c_i f(x_i)|.
/// Zero (within tolerance) iff f is both n-convex and n-concave on the grid.
double hyers_ulam_epsilon(const SampledFn& f, int degree,
                          const Tolerances& tol = {});

/// Deviation and the tuple attaining it.
struct EpsilonReport {
  double epsilon = 0.0;
  TupleIndices argmax;
};
EpsilonReport hyers_ulam_epsilon_report(const SampledFn& f, int degree,
                                        const Tolerances& tol = {});

/// Half-deviation stabilization: requires eps >= eps*(f). Sandwiches a
/// polynomial between f and f + eps and shifts it down by eps/2, so
/// |f(x) - w(x)| <= eps/2 at every grid point (within tol.acceptance).
/// Throws PreconditionError naming the violating tuple when eps < eps*.
Polynomial stabilize(const SampledFn& f, int degree, double eps,
                     const Tolerances& tol = {});

}  // namespace polysel
