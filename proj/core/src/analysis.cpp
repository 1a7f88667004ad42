#include "polysel/analysis.hpp"

#include <cmath>
#include <sstream>

namespace polysel {

namespace {

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

// f(x_0) minus the (n+1)-point Lagrange extrapolation from the tail.
double extrapolation_deviation(const SampledFn& f, std::span<const int> tuple,
                               std::vector<double>& xs_buf,
                               std::vector<double>& c_buf) {
  const Grid& grid = f.grid();
  const std::size_t k = tuple.size();
  const double x0 = grid[tuple[0]];
  xs_buf.clear();
  for (std::size_t j = 1; j < k; ++j) xs_buf.push_back(grid[tuple[j]]);
  c_buf.resize(k - 1);
  detail::coefficients_into(x0, xs_buf, c_buf);
  double extrap = 0.0;
  for (std::size_t j = 0; j < k - 1; ++j) extrap += c_buf[j] * f(tuple[j + 1]);
  return f(tuple[0]) - extrap;
}

template <typename Visit>
void for_each_strict_tuple(int m, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  do {
    if (visit(std::span<const int>(idx))) return;
  } while (detail::next_combination(idx, m));
}

}  // namespace

ConvexityReport is_n_convex(const SampledFn& f, int degree,
                            const Tolerances& tol) {
  check_scan_inputs(f.size(), degree, tol);
  const double sign = degree % 2 == 0 ? 1.0 : -1.0;
  ConvexityReport rep;
  rep.holds = true;
  std::vector<double> xs_buf, c_buf;
  for_each_strict_tuple(
      static_cast<int>(f.size()), degree + 2, [&](std::span<const int> t) {
        const double defect = sign * extrapolation_deviation(f, t, xs_buf, c_buf);
        if (defect > tol.decision) {
          rep.holds = false;
          rep.counterexample =
              ConvexityCounterexample{TupleIndices(t.begin(), t.end()), defect};
          return true;
        }
        return false;
      });
  return rep;
}

ConvexityReport is_n_concave(const SampledFn& f, int degree,
                             const Tolerances& tol) {
  std::vector<double> neg(f.values().begin(), f.values().end());
  for (double& v : neg) v = -v;
  return is_n_convex(SampledFn(f.grid(), std::move(neg)), degree, tol);
}

EpsilonReport hyers_ulam_epsilon_report(const SampledFn& f, int degree,
                                        const Tolerances& tol) {
  check_scan_inputs(f.size(), degree, tol);
  EpsilonReport rep;
  std::vector<double> xs_buf, c_buf;
  for_each_strict_tuple(
      static_cast<int>(f.size()), degree + 2, [&](std::span<const int> t) {
        const double dev =
            std::abs(extrapolation_deviation(f, t, xs_buf, c_buf));
        if (rep.argmax.empty() || dev > rep.epsilon) {
          rep.epsilon = dev;
          rep.argmax = TupleIndices(t.begin(), t.end());
        }
        return false;
      });
  return rep;
}

double hyers_ulam_epsilon(const SampledFn& f, int degree,
                          const Tolerances& tol) {
  return hyers_ulam_epsilon_report(f, degree, tol).epsilon;
}

Polynomial stabilize(const SampledFn& f, int degree, double eps,
                     const Tolerances& tol) {
  const EpsilonReport er = hyers_ulam_epsilon_report(f, degree, tol);
  if (eps < er.epsilon - tol.decision) {
    std::ostringstream os;
    os << "stabilize: eps = " << eps << " is below the measured deviation "
       << er.epsilon << " attained by tuple (";
    for (std::size_t j = 0; j < er.argmax.size(); ++j)
      os << (j ? "," : "") << er.argmax[j];
    os << ")";
    throw PreconditionError(os.str());
  }

  auto sandwich = [&](double e) {
    std::vector<double> upper(f.values().begin(), f.values().end());
    for (double& v : upper) v += e;
    return separate(f, SampledFn(f.grid(), std::move(upper)), degree, tol);
  };

  SeparationReport rep = sandwich(eps);
  if (!rep.separable) {
    // Boundary-of-feasibility retry with a slightly inflated band.
    rep = sandwich(eps + 10.0 * tol.decision);
  }
  if (!rep.separable || !rep.witness)
    throw ConditioningError(
        "stabilize: no polynomial fits inside the [f, f + eps] band");

  const Polynomial& phi = *rep.witness;
  std::vector<double> shifted(phi.node_values().begin(),
                              phi.node_values().end());
  for (double& v : shifted) v -= 0.5 * eps;
  return Polynomial(phi.nodes(), std::move(shifted), tol);
}

}  // namespace polysel
