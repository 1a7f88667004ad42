#pragma once

#include <optional>
#include <span>
#include <variant>

#include "polysel/selection.hpp"
#include "polysel/setvalued.hpp"

namespace polysel {

/// f(x) > g(x) at a single grid point; gap = f - g > 0.
struct PointwiseViolation {
  int index = 0;
  double gap = 0.0;
};

/// One of the two tuple inequalities failed; slack is the violated margin.
struct TupleViolation {
  enum class Side { Upper, Lower };
  TupleIndices indices;
  Side side = Side::Upper;
  double slack = 0.0;
};

struct SeparationReport {
  bool separable = false;
  std::optional<Polynomial> witness;
  std::optional<std::variant<PointwiseViolation, TupleViolation>> violation;
};

/// Right-hand sides of the two-sided tuple inequalities: with
/// c = coefficients(x_0; x_1..x_{n+1}),
///   upper = sum_{i odd} c_i g(x_i) + sum_{i even} c_i f(x_i)   (bounds f(x_0))
///   lower = sum_{i odd} c_i f(x_i) + sum_{i even} c_i g(x_i)   (bounds g(x_0))
/// lower <= upper whenever f <= g on the tuple points.
struct SeparationBounds {
  double upper = 0.0;
  double lower = 0.0;
};
SeparationBounds separation_bounds(const SampledFn& f, const SampledFn& g,
                                   std::span<const int> tuple,
                                   const Tolerances& tol = {});

/// Verdict only: separable iff f <= g at every grid point and, for every
/// strict tuple, f(x_0) <= upper and g(x_0) >= lower (each within
/// tol.decision). Pointwise violations are reported before tuple violations;
/// tuples with a repeated leading point reduce to the pointwise check and are
/// not enumerated.
SeparationReport check_separation(const SampledFn& f, const SampledFn& g,
                                  int degree, const Tolerances& tol = {},
                                  bool parallel = false);

/// Decision plus witness: builds the interval function [f, g] and searches it
/// for a polynomial selection, so the witness satisfies
/// f(x) <= w(x) <= g(x) at every grid point (within tol.acceptance). The
/// verdict always equals check_separation's.
SeparationReport separate(const SampledFn& f, const SampledFn& g, int degree,
                          const Tolerances& tol = {}, bool parallel = false);

/// Degree-1 specialization: for every grid pair x < y and every grid point z
/// between them, with t = (z - y)/(x - y), checks
///   f(z) <= t g(x) + (1-t) g(y)  and  g(z) >= t f(x) + (1-t) f(y).
/// Equivalent to check_separation(f, g, 1).
bool affine_condition(const SampledFn& f, const SampledFn& g,
                      const Tolerances& tol = {});

}  // namespace polysel
