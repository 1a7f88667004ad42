#include "polysel/separation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scan_util.hpp"

namespace polysel {

namespace {

void require_shared_grid(const SampledFn& f, const SampledFn& g) {
  if (f.size() != g.size())
    throw InvalidInputError("separation: grids differ in size");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.grid()[i] != g.grid()[i])
      throw InvalidInputError("separation: grids differ");
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

struct Scratch {
  std::vector<double> tail_xs;
  std::vector<double> coeffs;
};

// Right-hand sides of the two tuple inequalities. Tail positions are 1-based
// in the parity rule: position j (0-based) has odd index iff j is even.
SeparationBounds bounds_for(const SampledFn& f, const SampledFn& g,
                            std::span<const int> tuple, Scratch& s) {
  const Grid& grid = f.grid();
  const std::size_t k = tuple.size();
  const double x0 = grid[tuple[0]];
  s.tail_xs.clear();
  for (std::size_t j = 1; j < k; ++j) s.tail_xs.push_back(grid[tuple[j]]);
  s.coeffs.resize(k - 1);
  detail::coefficients_into(x0, s.tail_xs, s.coeffs);

  SeparationBounds b;
  for (std::size_t j = 0; j < k - 1; ++j) {
    const double c = s.coeffs[j];
    const double fv = f(tuple[j + 1]);
    const double gv = g(tuple[j + 1]);
    if (j % 2 == 0) {  // odd 1-based index, positive coefficient
      b.upper += c * gv;
      b.lower += c * fv;
    } else {  // even 1-based index, negative coefficient
      b.upper += c * fv;
      b.lower += c * gv;
    }
  }
  return b;
}

std::optional<TupleViolation> tuple_scan_block(const SampledFn& f,
                                               const SampledFn& g, int i0,
                                               int k, double decision_tol,
                                               Scratch& s) {
  const int m = static_cast<int>(f.size());
  std::vector<int> idx(k);
  idx[0] = i0;
  for (int j = 1; j < k; ++j) idx[j] = i0 + j;
  do {
    const SeparationBounds b = bounds_for(f, g, idx, s);
    if (f(idx[0]) > b.upper + decision_tol)
      return TupleViolation{idx, TupleViolation::Side::Upper,
                            f(idx[0]) - b.upper};
    if (g(idx[0]) < b.lower - decision_tol)
      return TupleViolation{idx, TupleViolation::Side::Lower,
                            b.lower - g(idx[0])};
  } while (detail::next_combination(std::span<int>(idx).subspan(1), m));
  return std::nullopt;
}

std::optional<PointwiseViolation> pointwise_check(const SampledFn& f,
                                                  const SampledFn& g,
                                                  double decision_tol) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f(i) > g(i) + decision_tol)
      return PointwiseViolation{static_cast<int>(i), f(i) - g(i)};
  return std::nullopt;
}

}  // namespace

SeparationBounds separation_bounds(const SampledFn& f, const SampledFn& g,
                                   std::span<const int> tuple,
                                   const Tolerances& tol) {
  require_shared_grid(f, g);
  const int m = static_cast<int>(f.size());
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
  Scratch s;
  return bounds_for(f, g, tuple, s);
}

SeparationReport check_separation(const SampledFn& f, const SampledFn& g,
                                  int degree, const Tolerances& tol,
                                  bool parallel) {
  require_shared_grid(f, g);
  check_scan_inputs(f.size(), degree, tol);

  SeparationReport rep;
  // Pointwise failures first: they are the equality-tuple case and make
  // tuple slacks meaningless.
  if (auto pv = pointwise_check(f, g, tol.decision)) {
    rep.separable = false;
    rep.violation = *pv;
    return rep;
  }

  const int m = static_cast<int>(f.size());
  const int k = degree + 2;
  const int blocks = m - k + 1;
  std::optional<TupleViolation> tv;
  if (parallel) {
    tv = detail::parallel_first_hit<TupleViolation>(
        blocks, [&](int i0) -> std::optional<TupleViolation> {
          Scratch s;
          return tuple_scan_block(f, g, i0, k, tol.decision, s);
        });
  } else {
    Scratch s;
    for (int i0 = 0; i0 < blocks && !tv; ++i0)
      tv = tuple_scan_block(f, g, i0, k, tol.decision, s);
  }

  if (tv) {
    rep.separable = false;
    rep.violation = *tv;
  } else {
    rep.separable = true;
  }
  return rep;
}

SeparationReport separate(const SampledFn& f, const SampledFn& g, int degree,
                          const Tolerances& tol, bool parallel) {
  SeparationReport rep = check_separation(f, g, degree, tol, parallel);
  if (!rep.separable) return rep;

  // Sandwich as an interval instance. The pointwise check passed within the
  // decision tolerance, so clamp any sub-tolerance inversions.
  std::vector<Interval> ivs;
  ivs.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    ivs.emplace_back(f(i), std::max(f(i), g(i)));
  IntervalFn F(f.grid(), std::move(ivs));
  rep.witness = detail::find_witness(F, degree, tol);
  return rep;
}

bool affine_condition(const SampledFn& f, const SampledFn& g,
                      const Tolerances& tol) {
  require_shared_grid(f, g);
  if (f.size() < 3)
    throw InvalidInputError("affine_condition: need at least three points");

  const Grid& grid = f.grid();
  const int m = static_cast<int>(f.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int z = a; z <= b; ++z) {
        const double t = (grid[z] - grid[b]) / (grid[a] - grid[b]);
        const double gmix = t * g(a) + (1.0 - t) * g(b);
        const double fmix = t * f(a) + (1.0 - t) * f(b);
        if (f(z) > gmix + tol.decision) return false;
        if (g(z) < fmix - tol.decision) return false;
      }
    }
  }
  return true;
}

}  // namespace polysel
