#include "polysel/lpsolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "polysel/errors.hpp"

namespace polysel {

namespace {

constexpr double kEps = 1e-12;

struct Problem {
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> objective;
  std::vector<double> lower, upper;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// abs-scale of a constraint evaluation, for relative violation tests
double row_scale(const std::vector<double>& row, const std::vector<double>& x,
                 double rhs) {
  double s = 1.0 + std::abs(rhs);
  for (std::size_t i = 0; i < row.size(); ++i) s += std::abs(row[i] * x[i]);
  return s;
}

bool solve_rec(const Problem& p, std::uint64_t seed, std::vector<double>& out);

// Eliminate variable `pivot` using row • x = rhs, producing the subproblem
// over the remaining variables. Box faces of the pivot variable become
// ordinary constraints.
bool solve_on_hyperplane(const Problem& p, std::size_t processed,
                         std::size_t h, std::uint64_t seed,
                         std::vector<double>& out) {
  const std::vector<double>& a = p.rows[h];
  const double b = p.rhs[h];
  const std::size_t d = a.size();

  std::size_t pivot = 0;
  for (std::size_t j = 1; j < d; ++j)
    if (std::abs(a[j]) > std::abs(a[pivot])) pivot = j;
  if (std::abs(a[pivot]) <= kEps) {
    // 0 • x <= b violated: genuinely infeasible row
    return false;
  }
  const double inv = 1.0 / a[pivot];

  auto project_row = [&](const std::vector<double>& r, double rr,
                         std::vector<double>& pr, double& prr) {
    const double f = r[pivot] * inv;
    pr.clear();
    pr.reserve(d - 1);
    for (std::size_t j = 0; j < d; ++j)
      if (j != pivot) pr.push_back(r[j] - f * a[j]);
    prr = rr - f * b;
  };

  Problem sub;
  sub.objective.reserve(d - 1);
  {
    const double f = p.objective[pivot] * inv;
    for (std::size_t j = 0; j < d; ++j)
      if (j != pivot) sub.objective.push_back(p.objective[j] - f * a[j]);
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    sub.lower.push_back(p.lower[j]);
    sub.upper.push_back(p.upper[j]);
  }

  // pivot box faces: x_pivot <= upper  and  -x_pivot <= -lower
  {
    std::vector<double> face(d, 0.0);
    std::vector<double> pr;
    double prr;
    face[pivot] = 1.0;
    project_row(face, p.upper[pivot], pr, prr);
    sub.rows.push_back(pr);
    sub.rhs.push_back(prr);
    face[pivot] = -1.0;
    project_row(face, -p.lower[pivot], pr, prr);
    sub.rows.push_back(pr);
    sub.rhs.push_back(prr);
  }
  for (std::size_t i = 0; i < processed; ++i) {
    std::vector<double> pr;
    double prr;
    project_row(p.rows[i], p.rhs[i], pr, prr);
    sub.rows.push_back(std::move(pr));
    sub.rhs.push_back(prr);
  }

  std::vector<double> sx;
  if (!solve_rec(sub, seed * 0x9e3779b97f4a7c15ULL + h + 1, sx)) return false;

  out.assign(d, 0.0);
  double acc = b;
  std::size_t t = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    out[j] = sx[t++];
    acc -= a[j] * out[j];
  }
  out[pivot] = acc * inv;
  return true;
}

bool solve_1d(const Problem& p, std::vector<double>& out) {
  double lo = p.lower[0];
  double hi = p.upper[0];
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const double a = p.rows[i][0];
    const double b = p.rhs[i];
    if (std::abs(a) <= kEps) {
      if (b < -kEps * (1.0 + std::abs(b))) return false;
      continue;
    }
    const double bound = b / a;
    if (a > 0.0)
      hi = std::min(hi, bound);
    else
      lo = std::max(lo, bound);
  }
  if (lo > hi + kEps * (1.0 + std::abs(lo) + std::abs(hi))) return false;
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
  out.assign(1, p.objective[0] > 0.0 ? lo : (p.objective[0] < 0.0 ? hi : lo));
  return true;
}

bool solve_rec(const Problem& p, std::uint64_t seed, std::vector<double>& out) {
  const std::size_t d = p.objective.size();
  if (d == 1) return solve_1d(p, out);

  // Start at the box corner minimizing the objective.
  out.resize(d);
  for (std::size_t j = 0; j < d; ++j)
    out[j] = p.objective[j] > 0.0 ? p.lower[j] : p.upper[j];

  // Processing order is reshuffled per recursion level, deterministically.
  std::vector<std::size_t> order(p.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  Problem seen;
  seen.objective = p.objective;
  seen.lower = p.lower;
  seen.upper = p.upper;
  seen.rows.reserve(p.rows.size());
  seen.rhs.reserve(p.rows.size());

  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t h = order[i];
    const double lhs = dot(p.rows[h], out);
    if (lhs <= p.rhs[h] + kEps * row_scale(p.rows[h], out, p.rhs[h])) {
      seen.rows.push_back(p.rows[h]);
      seen.rhs.push_back(p.rhs[h]);
      continue;
    }
    seen.rows.push_back(p.rows[h]);
    seen.rhs.push_back(p.rhs[h]);
    // The optimum of the prefix lies on this constraint's boundary.
    if (!solve_on_hyperplane(seen, seen.rows.size() - 1, seen.rows.size() - 1,
                             rng(), out))
      return false;
  }
  return true;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, std::uint64_t seed) {
  const std::size_t d = lp.objective.size();
  if (d == 0) throw InvalidInputError("solve_lp: empty objective");
  if (lp.lower.size() != d || lp.upper.size() != d)
    throw InvalidInputError("solve_lp: box size mismatch");
  if (lp.rows.size() != lp.rhs.size())
    throw InvalidInputError("solve_lp: rows/rhs size mismatch");
  for (const auto& r : lp.rows)
    if (r.size() != d)
      throw InvalidInputError("solve_lp: constraint dimension mismatch");
  for (std::size_t j = 0; j < d; ++j)
    if (!(lp.lower[j] <= lp.upper[j]) || !std::isfinite(lp.lower[j]) ||
        !std::isfinite(lp.upper[j]))
      throw InvalidInputError("solve_lp: box must be finite with lower <= upper");

  Problem p{lp.rows, lp.rhs, lp.objective, lp.lower, lp.upper};
  LpSolution sol;
  std::vector<double> x;
  if (solve_rec(p, seed, x)) {
    sol.status = LpSolution::Status::Optimal;
    sol.point = std::move(x);
  } else {
    sol.status = LpSolution::Status::Infeasible;
  }
  return sol;
}

}  // namespace polysel
