#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polysel/setvalued.hpp"

namespace polysel {

/// Coefficient-space view of an interval instance: find a = (a_0..a_n) with
///   lo_i <= sum_j a_j x_i^j <= hi_i  for every row.
struct ConstraintRow {
  double x = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct ConstraintSystem {
  std::vector<ConstraintRow> rows;
  int dimension = 0;  // n+1

  ConstraintSystem(std::vector<ConstraintRow> rows_, int dimension_);
};

ConstraintSystem constraint_system(const IntervalFn& F, int degree);

struct BruteForceStats {
  std::uint64_t candidates = 0;
  std::uint64_t skipped_singular = 0;
};

/// Independent ground truth: enumerates every candidate vertex (n+1 rows,
/// each clamped to its lo or hi face), solves the (n+1)x(n+1) node system and
/// tests all rows with tolerance tol. Returns a satisfying monomial
/// coefficient sequence or nullopt. Exact rational arithmetic is used when
/// every input is a small dyadic ratio; otherwise double precision with
/// partial pivoting. Deliberately exponential; refuses more than 14 rows.
std::optional<std::vector<double>> brute_force_feasible(
    const ConstraintSystem& cs, double tol, BruteForceStats* stats = nullptr);

enum class InstanceKind { Feasible, Infeasible, Random };

/// Seed-deterministic instance generator on a stratified grid in [-1, 1].
/// Feasible instances inflate intervals around a random polynomial;
/// infeasible instances plant a violated tuple (verified before returning);
/// random instances draw independent intervals.
IntervalFn gen_instance(std::uint64_t seed, int m, int degree,
                        InstanceKind kind);

/// Sandwich instance on a stratified grid in [0, 1]: f n-convex, g n-concave,
/// f <= g pointwise (asserted via the convexity tests before returning).
std::pair<SampledFn, SampledFn> gen_sandwich(std::uint64_t seed, int m,
                                             int degree);

/// Mirror-image family: f n-concave, g n-convex, f <= g pointwise.
std::pair<SampledFn, SampledFn> gen_sandwich_flipped(std::uint64_t seed, int m,
                                                     int degree);

}  // namespace polysel
