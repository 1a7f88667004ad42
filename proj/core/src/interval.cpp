#include "polysel/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polysel {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInputError("Interval: endpoints must be finite");
  }
  if (lo > hi) {
    std::ostringstream os;
    os << "Interval: lo > hi (" << lo << " > " << hi << ")";
    throw InvalidInputError(os.str());
  }
}

Interval scaled_sum(std::span<const double> coeffs,
                    std::span<const Interval> intervals) {
  if (coeffs.size() != intervals.size()) {
    std::ostringstream os;
    os << "scaled_sum: " << coeffs.size() << " coefficients vs "
       << intervals.size() << " intervals";
    throw InvalidInputError(os.str());
  }
  double u = 0.0;
  double v = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double L = coeffs[i];
    if (L == 0.0) continue;  // exact zero contributes [0, 0]
    if (L > 0.0) {
      u += L * intervals[i].lo;
      v += L * intervals[i].hi;
    } else {
      u += L * intervals[i].hi;
      v += L * intervals[i].lo;
    }
  }
  return Interval(u, v);
}

bool intersects(const Interval& a, const Interval& b, double tol) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi) + tol;
}

double gap(const Interval& a, const Interval& b) {
  return std::max(0.0, std::max(a.lo - b.hi, b.lo - a.hi));
}

}  // namespace polysel
