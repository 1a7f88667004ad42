#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "polysel/config.hpp"
#include "polysel/errors.hpp"

namespace polysel {

/// Strictly increasing abscissae. Construction validates the ordering and the
/// minimum node separation; everything downstream relies on it.
class Nodes {
 public:
  explicit Nodes(std::vector<double> xs, const Tolerances& tol = {});

  std::size_t size() const { return xs_.size(); }
  double operator[](std::size_t i) const { return xs_[i]; }
  std::span<const double> xs() const { return xs_; }

 private:
  std::vector<double> xs_;
};

/// Cardinal-basis coefficients c_i(x; x_1..x_k): the value at x of the i-th
/// Lagrange basis polynomial for the given nodes. For k = 1 the empty product
/// makes the single coefficient 1. The returned coefficients sum to 1, are the
/// unit coordinate vector when x coincides with a node, and alternate sign
/// (+,-,+,...) when x lies below every node.
std::vector<double> coefficients(double x, const Nodes& nodes,
                                 const Tolerances& tol = {});

/// Degree <= d polynomial in dual representation: interpolation data
/// (nodes + values) is canonical; the monomial coefficient list is derived on
/// demand and cached. Immutable after construction; the cache is published
/// once and shared by copies.
class Polynomial {
 public:
  Polynomial(Nodes nodes, std::vector<double> values, const Tolerances& tol = {});

  int degree() const { return static_cast<int>(nodes_.size()) - 1; }
  const Nodes& nodes() const { return nodes_; }
  std::span<const double> node_values() const { return values_; }

  /// Value of the interpolation form sum_i c_i(x; nodes) * values[i].
  double operator()(double x) const;

  /// Monomial coefficients, lowest degree first (length = degree()+1).
  /// Throws ConditioningError if the derived form disagrees with the
  /// interpolation form at some node by more than tol.evaluation.
  const std::vector<double>& monomial(const Tolerances& tol = {}) const;

 private:
  struct Cache;
  Nodes nodes_;
  std::vector<double> values_;
  std::shared_ptr<Cache> cache_;
};

/// Lagrange interpolation through (x_i, y_i) with strictly increasing x_i.
Polynomial interpolate(std::span<const std::pair<double, double>> points,
                       const Tolerances& tol = {});
Polynomial interpolate(Nodes nodes, std::vector<double> values,
                       const Tolerances& tol = {});

double evaluate(const Polynomial& p, double x);

std::vector<double> to_monomial(const Polynomial& p, const Tolerances& tol = {});

namespace detail {
// Coefficient kernel without Nodes re-validation; out.size() == xs.size().
void coefficients_into(double x, std::span<const double> xs,
                       std::span<double> out);
// Horner evaluation of a monomial coefficient list, lowest degree first.
double horner(std::span<const double> coeffs, double x);
}  // namespace detail

}  // namespace polysel
