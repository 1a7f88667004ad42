#include "polysel/setvalued.hpp"

#include <cmath>
#include <sstream>

namespace polysel {

Grid::Grid(std::vector<double> xs, const Tolerances& tol)
    : Grid(Nodes(std::move(xs), tol)) {}

Grid::Grid(Nodes nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2)
    throw InvalidInputError("Grid: need at least two sample points");
}

IntervalFn::IntervalFn(Grid grid, std::vector<Interval> intervals)
    : grid_(std::move(grid)), intervals_(std::move(intervals)) {
  if (intervals_.size() != grid_.size()) {
    std::ostringstream os;
    os << "IntervalFn: " << intervals_.size() << " intervals for "
       << grid_.size() << " grid points";
    throw InvalidInputError(os.str());
  }
}

SampledFn::SampledFn(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    std::ostringstream os;
    os << "SampledFn: " << values_.size() << " values for " << grid_.size()
       << " grid points";
    throw InvalidInputError(os.str());
  }
  for (double v : values_)
    if (!std::isfinite(v))
      throw InvalidInputError("SampledFn: values must be finite");
}

}  // namespace polysel
