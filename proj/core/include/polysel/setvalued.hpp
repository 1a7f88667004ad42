#pragma once

#include <span>
#include <vector>

#include "polysel/interval.hpp"
#include "polysel/lagrange.hpp"

namespace polysel {

/// Finite sampled domain: at least two strictly increasing abscissae.
class Grid {
 public:
  explicit Grid(std::vector<double> xs, const Tolerances& tol = {});
  explicit Grid(Nodes nodes);

  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  const Nodes& nodes() const { return nodes_; }
  std::span<const double> xs() const { return nodes_.xs(); }

 private:
  Nodes nodes_;
};

/// Interval-valued function on a grid: F(xs[i]) = intervals[i].
class IntervalFn {
 public:
  IntervalFn(Grid grid, std::vector<Interval> intervals);

  const Grid& grid() const { return grid_; }
  std::span<const Interval> intervals() const { return intervals_; }
  const Interval& operator()(std::size_t i) const { return intervals_[i]; }
  std::size_t size() const { return intervals_.size(); }

 private:
  Grid grid_;
  std::vector<Interval> intervals_;
};

/// Real-valued function sampled on a grid.
class SampledFn {
 public:
  SampledFn(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator()(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

}  // namespace polysel
