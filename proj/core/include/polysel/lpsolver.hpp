#pragma once

#include <cstdint>
#include <vector>

namespace polysel {

/// minimize objective . x  subject to  rows[i] . x <= rhs[i]  and
/// lower[j] <= x[j] <= upper[j]. The box must be finite: it bounds every
/// subproblem of the incremental solver.
struct LinearProgram {
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible };
  Status status = Status::Infeasible;
  std::vector<double> point;
};

/// Randomized-incremental linear programming for small dimension (Seidel-style
/// recursion on the dimension). Constraints are processed in a seeded shuffled
/// order, so results are deterministic for a fixed seed. Suited to the desk
/// scale this library targets: dimension <= ~12, a few thousand constraints.
LpSolution solve_lp(const LinearProgram& lp, std::uint64_t seed = 0x5eed);

}  // namespace polysel
