#pragma once

#include <optional>
#include <span>

#include "polysel/setvalued.hpp"
#include "polysel/tuples.hpp"

namespace polysel {

/// A violated tuple together with the distance between F(x_0) and the scaled
/// interval sum of the tail; re-checkable independently of any solver.
struct TupleCertificate {
  TupleIndices indices;
  double gap = 0.0;
};

struct FeasibilityReport {
  bool feasible = false;
  /// Present when a witness was requested and the instance is feasible.
  std::optional<Polynomial> witness;
  /// Present iff infeasible: the lexicographically first failing tuple.
  std::optional<TupleCertificate> certificate;
};

/// The intersection condition for one ordered (n+2)-tuple of grid indices:
/// with L = coefficients(x_0; x_1..x_{n+1}), tests
///   F(x_0)  intersects  sum_i L_i F(x_i).
/// Degenerate interval functions sampled from a degree <= n polynomial
/// satisfy it for every tuple.
bool tuple_condition(const IntervalFn& F, std::span<const int> tuple,
                     const Tolerances& tol = {});

/// Scans all C(m, n+2) tuples in lexicographic order. Feasible iff every
/// tuple passes; the certificate is the first failure. No witness is built.
/// degree = 0 is supported as an extension (pairwise interval intersection).
FeasibilityReport check_selection(const IntervalFn& F, int degree,
                                  const Tolerances& tol = {},
                                  bool parallel = false);

/// Constructive witness for a single tuple that satisfies tuple_condition:
/// a polynomial of degree <= n passing through all n+2 tuple intervals.
/// Case order when locating F(x_0) against [u, v]: u inside, then v inside,
/// then F(x_0) contained in [u, v]. Throws InfeasibleTupleError otherwise.
Polynomial witness_for_tuple(const IntervalFn& F, std::span<const int> tuple,
                             const Tolerances& tol = {});

/// Full decision with witness: the verdict comes from the tuple scan (so it
/// always matches check_selection); when feasible, a global witness with
/// w(x_i) inside F(x_i) at every grid point is produced by low-dimensional
/// linear programming over the monomial coefficient space, with exhaustive
/// vertex enumeration as fallback.
FeasibilityReport solve_selection(const IntervalFn& F, int degree,
                                  const Tolerances& tol = {},
                                  bool parallel = false);

namespace detail {
/// Witness search behind solve_selection/separate: maximize the minimum slack
/// over the interval constraints, fall back to vertex enumeration. Requires a
/// feasible instance (tuple scan passed); throws ConditioningError if no
/// candidate can be certified within tol.acceptance.
Polynomial find_witness(const IntervalFn& F, int degree, const Tolerances& tol);
}  // namespace detail

}  // namespace polysel
