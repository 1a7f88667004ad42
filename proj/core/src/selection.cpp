#include "polysel/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polysel/lpsolver.hpp"
#include "scan_util.hpp"

namespace polysel {

namespace {

void validate_tuple(const IntervalFn& F, std::span<const int> tuple,
                    const Tolerances& tol) {
  const int m = static_cast<int>(F.size());
  if (tuple.size() < 2)
    throw InvalidInputError("tuple: need at least two indices");
  if (static_cast<int>(tuple.size()) > tol.max_degree + 2)
    throw InvalidInputError("tuple: longer than the degree bound allows");
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (tuple[j] < 0 || tuple[j] >= m)
      throw InvalidInputError("tuple: index out of grid bounds");
    if (j > 0 && tuple[j] <= tuple[j - 1])
      throw InvalidInputError("tuple: indices must be strictly increasing");
  }
}

void check_scan_inputs(std::size_t m, int degree, const Tolerances& tol) {
  if (degree < 0 || degree > tol.max_degree) {
    std::ostringstream os;
    os << "degree " << degree << " outside the supported range [0, "
       << tol.max_degree << "]";
    throw InvalidInputError(os.str());
  }
  if (m < static_cast<std::size_t>(degree) + 2) {
    std::ostringstream os;
    os << "grid too small: " << m << " points, degree " << degree
       << " needs at least " << degree + 2;
    throw InvalidInputError(os.str());
  }
}

// Workspace reused across the tuple scan.
struct Scratch {
  std::vector<double> tail_xs;
  std::vector<double> coeffs;
  std::vector<Interval> tail_iv;
};

// 0 when the tuple condition holds (within tol); otherwise the positive
// distance between F(x_0) and the scaled interval sum of the tail.
double tuple_violation(const IntervalFn& F, std::span<const int> tuple,
                       double decision_tol, Scratch& s) {
  const Grid& grid = F.grid();
  const std::size_t k = tuple.size();
  const double x0 = grid[tuple[0]];
  s.tail_xs.clear();
  s.tail_iv.clear();
  for (std::size_t j = 1; j < k; ++j) {
    s.tail_xs.push_back(grid[tuple[j]]);
    s.tail_iv.push_back(F(tuple[j]));
  }
  s.coeffs.resize(k - 1);
  detail::coefficients_into(x0, s.tail_xs, s.coeffs);
  const Interval sum = scaled_sum(s.coeffs, s.tail_iv);
  const Interval& f0 = F(tuple[0]);
  if (intersects(f0, sum, decision_tol)) return 0.0;
  return gap(f0, sum);
}

std::optional<TupleCertificate> scan_serial(const IntervalFn& F, int k,
                                            double decision_tol) {
  const int m = static_cast<int>(F.size());
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  Scratch s;
  do {
    const double g = tuple_violation(F, idx, decision_tol, s);
    if (g > 0.0) return TupleCertificate{idx, g};
  } while (detail::next_combination(idx, m));
  return std::nullopt;
}

std::optional<TupleCertificate> scan_parallel(const IntervalFn& F, int k,
                                              double decision_tol) {
  const int m = static_cast<int>(F.size());
  const int blocks = m - k + 1;  // tuples grouped by leading index
  return detail::parallel_first_hit<TupleCertificate>(
      blocks, [&](int i0) -> std::optional<TupleCertificate> {
        Scratch s;
        std::vector<int> idx(k);
        idx[0] = i0;
        for (int j = 1; j < k; ++j) idx[j] = i0 + j;
        do {
          const double g = tuple_violation(F, idx, decision_tol, s);
          if (g > 0.0) return TupleCertificate{idx, g};
        } while (detail::next_combination(std::span<int>(idx).subspan(1), m));
        return std::nullopt;
      });
}

}  // namespace

bool tuple_condition(const IntervalFn& F, std::span<const int> tuple,
                     const Tolerances& tol) {
  validate_tuple(F, tuple, tol);
  Scratch s;
  return tuple_violation(F, tuple, tol.decision, s) == 0.0;
}

FeasibilityReport check_selection(const IntervalFn& F, int degree,
                                  const Tolerances& tol, bool parallel) {
  check_scan_inputs(F.size(), degree, tol);
  const int k = degree + 2;
  const auto cert = parallel ? scan_parallel(F, k, tol.decision)
                             : scan_serial(F, k, tol.decision);
  FeasibilityReport rep;
  rep.feasible = !cert.has_value();
  rep.certificate = cert;
  return rep;
}

Polynomial witness_for_tuple(const IntervalFn& F, std::span<const int> tuple,
                             const Tolerances& tol) {
  validate_tuple(F, tuple, tol);
  const Grid& grid = F.grid();
  const int k = static_cast<int>(tuple.size());
  const int n = k - 2;
  const double x0 = grid[tuple[0]];

  std::vector<double> xs(k - 1);
  std::vector<double> L(k - 1);
  for (int j = 1; j < k; ++j) xs[j - 1] = grid[tuple[j]];
  detail::coefficients_into(x0, xs, L);

  // Endpoint relabeling by the sign of each coefficient: the scaled sum of
  // the tail intervals is then exactly [u, v] with u <= v.
  const double y0 = F(tuple[0]).lo;
  const double z0 = F(tuple[0]).hi;
  std::vector<double> y(k - 1), z(k - 1);
  double u = 0.0, v = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    const Interval& iv = F(tuple[i + 1]);
    if (L[i] >= 0.0) {
      y[i] = iv.lo;
      z[i] = iv.hi;
    } else {
      y[i] = iv.hi;
      z[i] = iv.lo;
    }
    u += L[i] * y[i];
    v += L[i] * z[i];
  }

  double t;
  if (u >= y0 - tol.decision && u <= z0 + tol.decision) {
    t = 1.0;  // u inside F(x_0)
  } else if (v >= y0 - tol.decision && v <= z0 + tol.decision) {
    t = 0.0;  // v inside F(x_0)
  } else if (y0 >= u - tol.decision && z0 <= v + tol.decision) {
    // F(x_0) inside [u, v]; u < v here, since u = v lands in the first case
    t = std::clamp((v - y0) / (v - u), 0.0, 1.0);
  } else {
    std::ostringstream os;
    os << "witness_for_tuple: tuple fails the intersection condition (gap "
       << gap(Interval(y0, z0), Interval(std::min(u, v), std::max(u, v)))
       << ")";
    throw InfeasibleTupleError(os.str());
  }

  const double v0 = t * u + (1.0 - t) * v;
  if (n == 0) {
    // Constant case: the prescribed values at both tuple points coincide.
    return Polynomial(Nodes({x0}, tol), {v0}, tol);
  }

  // Interpolate through x_0, x_1..x_{n-1}, x_{n+1}; the skipped point x_n is
  // matched automatically by the coefficient identities.
  std::vector<double> wx, wy;
  wx.reserve(n + 1);
  wy.reserve(n + 1);
  wx.push_back(x0);
  wy.push_back(v0);
  for (int i = 1; i <= n - 1; ++i) {
    wx.push_back(xs[i - 1]);
    wy.push_back(t * y[i - 1] + (1.0 - t) * z[i - 1]);
  }
  wx.push_back(xs[n]);
  wy.push_back(t * y[n] + (1.0 - t) * z[n]);
  return Polynomial(Nodes(std::move(wx), tol), std::move(wy), tol);
}

namespace detail {

namespace {

double membership_violation(const IntervalFn& F, const Polynomial& w) {
  double worst = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double val = w(F.grid()[i]);
    worst = std::max(worst, F(i).lo - val);
    worst = std::max(worst, val - F(i).hi);
  }
  return worst;
}

// Reconstruct the witness as interpolation data on a spread subset of grid
// points (keeps Polynomial in its canonical dual representation).
Polynomial from_monomial_in_t(const IntervalFn& F,
                              std::span<const double> coeffs_t, double t_shift,
                              double t_scale, int degree,
                              const Tolerances& tol) {
  const Grid& grid = F.grid();
  const int m = static_cast<int>(grid.size());
  std::vector<double> wx, wy;
  for (int j = 0; j <= degree; ++j) {
    const int idx = degree == 0
                        ? 0
                        : static_cast<int>(std::lround(
                              static_cast<double>(j) * (m - 1) / degree));
    const double x = grid[idx];
    wx.push_back(x);
    wy.push_back(horner(coeffs_t, (x - t_shift) * t_scale));
  }
  return Polynomial(Nodes(std::move(wx), tol), std::move(wy), tol);
}

std::optional<Polynomial> witness_by_lp(const IntervalFn& F, int degree,
                                        const Tolerances& tol,
                                        double box_scale) {
  const Grid& grid = F.grid();
  const std::size_t m = grid.size();
  const int dim = degree + 2;  // coefficients plus one slack variable

  // Rescale abscissae to [-1, 1] before forming the power basis.
  const double xmin = grid[0];
  const double xmax = grid[m - 1];
  const double t_shift = 0.5 * (xmin + xmax);
  const double t_scale = 2.0 / (xmax - xmin);

  double y_mag = 0.0;
  for (const Interval& iv : F.intervals())
    y_mag = std::max({y_mag, std::abs(iv.lo), std::abs(iv.hi)});

  LinearProgram lp;
  lp.objective.assign(dim, 0.0);
  lp.objective[dim - 1] = -1.0;  // maximize the minimum slack
  const double coeff_box = box_scale * (1.0 + y_mag);
  lp.lower.assign(dim, -coeff_box);
  lp.upper.assign(dim, coeff_box);
  lp.lower[dim - 1] = -10.0 * (1.0 + y_mag);
  lp.upper[dim - 1] = 10.0 * (1.0 + y_mag);

  for (std::size_t i = 0; i < m; ++i) {
    const double t = (grid[i] - t_shift) * t_scale;
    std::vector<double> row(dim, 0.0);
    double p = 1.0;
    for (int j = 0; j <= degree; ++j) {
      row[j] = p;
      p *= t;
    }
    row[dim - 1] = 1.0;
    lp.rows.push_back(row);  // p(t_i) + s <= hi_i
    lp.rhs.push_back(F(i).hi);
    for (int j = 0; j <= degree; ++j) row[j] = -row[j];
    lp.rows.push_back(std::move(row));  // -p(t_i) + s <= -lo_i
    lp.rhs.push_back(-F(i).lo);
  }

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) return std::nullopt;
  std::span<const double> coeffs_t(sol.point.data(), degree + 1);
  return from_monomial_in_t(F, coeffs_t, t_shift, t_scale, degree, tol);
}

// Last-resort exhaustive search over candidate vertices: every choice of
// degree+1 grid rows, each pinned to its lo or hi endpoint.
std::optional<Polynomial> witness_by_enumeration(const IntervalFn& F,
                                                 int degree,
                                                 const Tolerances& tol) {
  const Grid& grid = F.grid();
  const int m = static_cast<int>(grid.size());
  const int k = degree + 1;
  std::vector<int> rows(k);
  for (int j = 0; j < k; ++j) rows[j] = j;

  std::optional<Polynomial> best;
  double best_violation = std::numeric_limits<double>::infinity();
  do {
    for (unsigned faces = 0; faces < (1u << k); ++faces) {
      std::vector<double> xs(k), ys(k);
      for (int j = 0; j < k; ++j) {
        xs[j] = grid[rows[j]];
        const Interval& iv = F(rows[j]);
        ys[j] = (faces >> j) & 1u ? iv.hi : iv.lo;
      }
      Polynomial cand(Nodes(xs, tol), ys, tol);
      const double viol = membership_violation(F, cand);
      if (viol < best_violation) {
        best_violation = viol;
        best = std::move(cand);
        if (best_violation <= 0.5 * tol.acceptance) return best;
      }
    }
  } while (detail::next_combination(rows, m));

  if (best && best_violation <= tol.acceptance) return best;
  return std::nullopt;
}

}  // namespace

Polynomial find_witness(const IntervalFn& F, int degree,
                        const Tolerances& tol) {
  for (const double box_scale : {1e6, 1e9}) {
    if (auto w = witness_by_lp(F, degree, tol, box_scale)) {
      if (membership_violation(F, *w) <= 0.5 * tol.acceptance) return *w;
    }
  }
  if (auto w = witness_by_enumeration(F, degree, tol)) return *w;
  throw ConditioningError(
      "witness search failed: no candidate satisfies the interval "
      "constraints within the acceptance tolerance");
}

}  // namespace detail

FeasibilityReport solve_selection(const IntervalFn& F, int degree,
                                  const Tolerances& tol, bool parallel) {
  FeasibilityReport rep = check_selection(F, degree, tol, parallel);
  if (rep.feasible) rep.witness = detail::find_witness(F, degree, tol);
  return rep;
}

}  // namespace polysel
