#include "polysel/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "polysel/analysis.hpp"
#include "polysel/selection.hpp"
#include "polysel/tuples.hpp"

namespace polysel {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Exact arithmetic is worthwhile only when every input is a small dyadic
// ratio (hand-built fixtures, quarter/half grids). 53-bit random doubles
// would make the rationals explode, so those take the pivoted double path.
bool is_simple_ratio(double v) {
  if (!std::isfinite(v) || std::abs(v) > 1e6) return false;
  const double scaled = v * 1048576.0;  // 2^20
  return scaled == std::floor(scaled);
}

template <typename T>
T from_double(double v) {
  if constexpr (std::is_same_v<T, double>)
    return v;
  else
    return T(v);
}

template <typename T>
T abs_value(const T& v) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(v);
}

// Gaussian elimination; double uses partial pivoting, rationals pick the
// first nonzero pivot. Returns nullopt on a (numerically) singular system.
template <typename T>
std::optional<std::vector<T>> solve_linear(std::vector<std::vector<T>> A,
                                           std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs_value(A[r][col]) > abs_value(A[pivot][col])) pivot = r;
    if (A[pivot][col] == T(0)) return std::nullopt;
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = A[r][col] / A[col][col];
      if (f == T(0)) continue;
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t r = n; r-- > 0;) {
    T acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  return x;
}

template <typename T>
T horner_eval(const std::vector<T>& coeffs, const T& x) {
  T r(0);
  for (std::size_t j = coeffs.size(); j-- > 0;) r = r * x + coeffs[j];
  return r;
}

template <typename T>
std::optional<std::vector<double>> enumerate_vertices(
    const ConstraintSystem& cs, double tol, BruteForceStats* stats) {
  const int dim = cs.dimension;
  const int m = static_cast<int>(cs.rows.size());
  const T tol_t = from_double<T>(tol);

  std::vector<T> xs(m), los(m), his(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = from_double<T>(cs.rows[i].x);
    los[i] = from_double<T>(cs.rows[i].lo);
    his[i] = from_double<T>(cs.rows[i].hi);
  }

  std::vector<int> active(dim);
  for (int j = 0; j < dim; ++j) active[j] = j;
  do {
    for (unsigned faces = 0; faces < (1u << dim); ++faces) {
      if (stats) ++stats->candidates;
      std::vector<std::vector<T>> V(dim, std::vector<T>(dim));
      std::vector<T> y(dim);
      for (int r = 0; r < dim; ++r) {
        const int row = active[r];
        T p(1);
        for (int c = 0; c < dim; ++c) {
          V[r][c] = p;
          p *= xs[row];
        }
        y[r] = (faces >> r) & 1u ? his[row] : los[row];
      }
      auto sol = solve_linear<T>(std::move(V), std::move(y));
      if (!sol) {
        if (stats) ++stats->skipped_singular;
        continue;
      }
      // Residual check: a badly conditioned solve must not sneak through.
      if constexpr (std::is_same_v<T, double>) {
        bool garbage = false;
        for (int r = 0; r < dim && !garbage; ++r) {
          const int row = active[r];
          const double want = (faces >> r) & 1u ? his[row] : los[row];
          const double got = horner_eval(*sol, xs[row]);
          if (std::abs(got - want) > 1e-6 * (1.0 + std::abs(want)))
            garbage = true;
        }
        if (garbage) {
          if (stats) ++stats->skipped_singular;
          continue;
        }
      }
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        const T val = horner_eval(*sol, xs[i]);
        if (val < los[i] - tol_t || val > his[i] + tol_t) ok = false;
      }
      if (ok) {
        std::vector<double> out(dim);
        for (int j = 0; j < dim; ++j) {
          if constexpr (std::is_same_v<T, double>)
            out[j] = (*sol)[j];
          else
            out[j] = (*sol)[j].template convert_to<double>();
        }
        return out;
      }
    }
  } while (detail::next_combination(active, m));
  return std::nullopt;
}

std::vector<double> stratified_grid(std::mt19937_64& rng, int m, double lo,
                                    double hi) {
  std::uniform_real_distribution<double> jitter(0.2, 0.8);
  std::vector<double> xs(m);
  const double step = (hi - lo) / m;
  for (int i = 0; i < m; ++i) xs[i] = lo + (i + jitter(rng)) * step;
  return xs;
}

std::vector<double> random_poly_coeffs(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  std::vector<double> a(degree + 1);
  for (double& c : a) c = dist(rng);
  return a;
}

TupleIndices draw_tuple(std::mt19937_64& rng, int m, int k) {
  // Floyd-style sampling without replacement, then sort.
  std::vector<int> picked;
  picked.reserve(k);
  for (int j = m - k; j < m; ++j) {
    std::uniform_int_distribution<int> dist(0, j);
    int t = dist(rng);
    if (std::find(picked.begin(), picked.end(), t) != picked.end()) t = j;
    picked.push_back(t);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

ConstraintSystem::ConstraintSystem(std::vector<ConstraintRow> rows_,
                                   int dimension_)
    : rows(std::move(rows_)), dimension(dimension_) {
  if (dimension < 1)
    throw InvalidInputError("ConstraintSystem: dimension must be positive");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ConstraintRow& r = rows[i];
    if (!std::isfinite(r.x) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
      throw InvalidInputError("ConstraintSystem: entries must be finite");
    if (r.lo > r.hi)
      throw InvalidInputError("ConstraintSystem: lo > hi in some row");
    if (i > 0 && rows[i - 1].x >= r.x)
      throw InvalidInputError(
          "ConstraintSystem: abscissae must be strictly increasing");
  }
}

ConstraintSystem constraint_system(const IntervalFn& F, int degree) {
  std::vector<ConstraintRow> rows;
  rows.reserve(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    rows.push_back({F.grid()[i], F(i).lo, F(i).hi});
  return ConstraintSystem(std::move(rows), degree + 1);
}

std::optional<std::vector<double>> brute_force_feasible(
    const ConstraintSystem& cs, double tol, BruteForceStats* stats) {
  const int m = static_cast<int>(cs.rows.size());
  if (m > 14)
    throw InvalidInputError(
        "brute_force_feasible: refusing more than 14 rows (the vertex "
        "enumeration is deliberately exponential)");
  if (m < cs.dimension + 1) {
    std::ostringstream os;
    os << "brute_force_feasible: need at least " << cs.dimension + 1
       << " rows, got " << m;
    throw InvalidInputError(os.str());
  }

  // The tolerance converts to an exact rational either way; only the data
  // entries decide which path keeps the arithmetic small.
  bool exact = true;
  for (const ConstraintRow& r : cs.rows)
    exact = exact && is_simple_ratio(r.x) && is_simple_ratio(r.lo) &&
            is_simple_ratio(r.hi);

  if (exact) return enumerate_vertices<Rational>(cs, tol, stats);
  return enumerate_vertices<double>(cs, tol, stats);
}

IntervalFn gen_instance(std::uint64_t seed, int m, int degree,
                        InstanceKind kind) {
  if (degree < 0) throw InvalidInputError("gen_instance: negative degree");
  if (m < degree + 2)
    throw InvalidInputError("gen_instance: grid too small for the degree");

  std::mt19937_64 rng(seed);
  Grid grid(stratified_grid(rng, m, -1.0, 1.0));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Interval> ivs;
  ivs.reserve(m);

  switch (kind) {
    case InstanceKind::Feasible: {
      const std::vector<double> w = random_poly_coeffs(rng, degree);
      for (int i = 0; i < m; ++i) {
        const double wi = detail::horner(w, grid[i]);
        if (unit(rng) < 0.1) {
          ivs.emplace_back(wi, wi);  // exact-selection point
        } else {
          const double below = 2.0 * unit(rng);
          const double above = 2.0 * unit(rng);
          ivs.emplace_back(wi - below, wi + above);
        }
      }
      return IntervalFn(std::move(grid), std::move(ivs));
    }
    case InstanceKind::Random: {
      for (int i = 0; i < m; ++i) {
        const double center = 16.0 * unit(rng) - 8.0;
        const double half = 2.0 * unit(rng);
        ivs.emplace_back(center - half, center + half);
      }
      return IntervalFn(std::move(grid), std::move(ivs));
    }
    case InstanceKind::Infeasible: {
      for (int i = 0; i < m; ++i) {
        const double center = 16.0 * unit(rng) - 8.0;
        const double half = 2.0 * unit(rng);
        ivs.emplace_back(center - half, center + half);
      }
      const TupleIndices tuple = draw_tuple(rng, m, degree + 2);
      std::vector<double> tail_xs(degree + 1), coeffs(degree + 1);
      std::vector<Interval> tail_iv;
      for (int j = 1; j <= degree + 1; ++j) {
        tail_xs[j - 1] = grid[tuple[j]];
        tail_iv.push_back(ivs[tuple[j]]);
      }
      detail::coefficients_into(grid[tuple[0]], tail_xs, coeffs);
      const Interval sum = scaled_sum(coeffs, tail_iv);

      const bool below = unit(rng) < 0.5;
      const double width = unit(rng);
      double g = 0.5 + 1.5 * unit(rng);
      for (int attempt = 0; attempt < 8; ++attempt, g *= 2.0) {
        ivs[tuple[0]] = below ? Interval(sum.lo - g - width, sum.lo - g)
                              : Interval(sum.hi + g, sum.hi + g + width);
        IntervalFn F(grid, ivs);
        if (!tuple_condition(F, tuple)) return F;
      }
      throw ConditioningError(
          "gen_instance: could not plant a violated tuple");
    }
  }
  throw InvalidInputError("gen_instance: unknown kind");
}

namespace {

std::pair<SampledFn, SampledFn> gen_sandwich_impl(std::uint64_t seed, int m,
                                                  int degree, bool flipped) {
  if (degree < 0) throw InvalidInputError("gen_sandwich: negative degree");
  if (m < degree + 2)
    throw InvalidInputError("gen_sandwich: grid too small for the degree");

  std::mt19937_64 rng(seed);
  Grid grid(stratified_grid(rng, m, 0.0, 1.0));
  const std::vector<double> w = random_poly_coeffs(rng, degree);

  constexpr double e = 2.718281828459045;
  std::vector<double> fv(m), gv(m);
  for (int i = 0; i < m; ++i) {
    const double wi = detail::horner(w, grid[i]);
    const double ex = std::exp(grid[i]);
    if (!flipped) {
      // exp is n-convex for every n; 2e dominates 2*exp on [0, 1]
      fv[i] = wi + ex;
      gv[i] = wi + 2.0 * e - ex;
    } else {
      // mirror image: exp(x) >= 1 on [0, 1] keeps f <= g
      fv[i] = wi - ex;
      gv[i] = wi + ex - 2.0;
    }
  }
  SampledFn f(grid, std::move(fv));
  SampledFn g(grid, std::move(gv));

  const ConvexityReport cf =
      flipped ? is_n_concave(f, degree) : is_n_convex(f, degree);
  const ConvexityReport cg =
      flipped ? is_n_convex(g, degree) : is_n_concave(g, degree);
  if (!cf.holds || !cg.holds)
    throw ConditioningError("gen_sandwich: generated pair failed its shape check");
  for (int i = 0; i < m; ++i)
    if (f(i) > g(i))
      throw ConditioningError("gen_sandwich: generated pair violates f <= g");
  return {std::move(f), std::move(g)};
}

}  // namespace

std::pair<SampledFn, SampledFn> gen_sandwich(std::uint64_t seed, int m,
                                             int degree) {
  return gen_sandwich_impl(seed, m, degree, false);
}

std::pair<SampledFn, SampledFn> gen_sandwich_flipped(std::uint64_t seed, int m,
                                                     int degree) {
  return gen_sandwich_impl(seed, m, degree, true);
}

}  // namespace polysel
