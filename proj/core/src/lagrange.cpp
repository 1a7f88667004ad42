#include "polysel/lagrange.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace polysel {

namespace detail {

void coefficients_into(double x, std::span<const double> xs,
                       std::span<double> out) {
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i) {
    double c = 1.0;  // empty product for k == 1
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      c *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    out[i] = c;
  }
}

double horner(std::span<const double> coeffs, double x) {
  double r = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) r = r * x + coeffs[j];
  return r;
}

}  // namespace detail

Nodes::Nodes(std::vector<double> xs, const Tolerances& tol) : xs_(std::move(xs)) {
  if (xs_.empty()) throw InvalidInputError("Nodes: need at least one abscissa");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i])) {
      std::ostringstream os;
      os << "Nodes: abscissa " << i << " is not finite";
      throw InvalidInputError(os.str());
    }
    if (i > 0 && !(xs_[i] - xs_[i - 1] >= tol.node_sep)) {
      std::ostringstream os;
      os << "Nodes: abscissae must increase by at least " << tol.node_sep
         << " (positions " << i - 1 << ", " << i << ": " << xs_[i - 1] << ", "
         << xs_[i] << ")";
      throw InvalidInputError(os.str());
    }
  }
}

std::vector<double> coefficients(double x, const Nodes& nodes,
                                 const Tolerances& tol) {
  if (static_cast<int>(nodes.size()) > tol.max_degree + 1) {
    std::ostringstream os;
    os << "coefficients: " << nodes.size() << " nodes exceed the degree bound "
       << tol.max_degree;
    throw InvalidInputError(os.str());
  }
  std::vector<double> out(nodes.size());
  detail::coefficients_into(x, nodes.xs(), out);
  return out;
}

struct Polynomial::Cache {
  std::once_flag flag;
  std::vector<double> coeffs;
};

Polynomial::Polynomial(Nodes nodes, std::vector<double> values,
                       const Tolerances& tol)
    : nodes_(std::move(nodes)),
      values_(std::move(values)),
      cache_(std::make_shared<Cache>()) {
  if (values_.size() != nodes_.size())
    throw InvalidInputError("Polynomial: node/value length mismatch");
  if (static_cast<int>(nodes_.size()) > tol.max_degree + 1) {
    std::ostringstream os;
    os << "Polynomial: degree " << nodes_.size() - 1
       << " exceeds the supported bound " << tol.max_degree;
    throw InvalidInputError(os.str());
  }
  for (double v : values_)
    if (!std::isfinite(v))
      throw InvalidInputError("Polynomial: values must be finite");
}

double Polynomial::operator()(double x) const {
  const std::size_t k = nodes_.size();
  double buf[16];
  std::vector<double> heap;
  std::span<double> c;
  if (k <= 16) {
    c = std::span<double>(buf, k);
  } else {
    heap.resize(k);
    c = heap;
  }
  detail::coefficients_into(x, nodes_.xs(), c);
  double r = 0.0;
  for (std::size_t i = 0; i < k; ++i) r += c[i] * values_[i];
  return r;
}

const std::vector<double>& Polynomial::monomial(const Tolerances& tol) const {
  std::call_once(cache_->flag, [&] {
    const std::size_t k = nodes_.size();
    std::span<const double> xs = nodes_.xs();

    // Newton divided differences, then expansion to the monomial basis.
    std::vector<double> dd(values_);
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = k - 1; i >= j; --i)
        dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);

    std::vector<double> c{dd[k - 1]};
    for (std::size_t i = k - 1; i-- > 0;) {
      c.push_back(0.0);
      for (std::size_t j = c.size() - 1; j >= 1; --j)
        c[j] = c[j - 1] - xs[i] * c[j];
      c[0] = dd[i] - xs[i] * c[0];
    }

    double worst = 0.0;
    std::size_t worst_node = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double err = std::abs(detail::horner(c, xs[i]) - values_[i]);
      if (err > worst) {
        worst = err;
        worst_node = i;
      }
    }
    if (worst > tol.evaluation) {
      std::ostringstream os;
      os << "monomial conversion disagrees with the interpolation form by "
         << worst << " at node " << worst_node << " (x = " << xs[worst_node]
         << "), tolerance " << tol.evaluation;
      throw ConditioningError(os.str());
    }
    cache_->coeffs = std::move(c);
  });
  return cache_->coeffs;
}

Polynomial interpolate(std::span<const std::pair<double, double>> points,
                       const Tolerances& tol) {
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return Polynomial(Nodes(std::move(xs), tol), std::move(ys), tol);
}

Polynomial interpolate(Nodes nodes, std::vector<double> values,
                       const Tolerances& tol) {
  return Polynomial(std::move(nodes), std::move(values), tol);
}

double evaluate(const Polynomial& p, double x) { return p(x); }

std::vector<double> to_monomial(const Polynomial& p, const Tolerances& tol) {
  return p.monomial(tol);
}

}  // namespace polysel
