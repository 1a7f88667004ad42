#pragma once

namespace polysel {

// Floating-point policy shared by every decision procedure in the library.
// The math assumes exact reals; these tolerances make each comparison explicit
// and are reported alongside every verdict.
struct Tolerances {
  // Minimum spacing between two abscissae before they count as distinct.
  double node_sep = 1e-9;
  // Slack granted to interval intersections and inequality checks.
  double decision = 1e-9;
  // Allowed disagreement between the interpolation form and a derived
  // monomial form at the nodes.
  double evaluation = 1e-9;
  // Slack granted when verifying that a constructed witness lies inside the
  // prescribed intervals; looser than `decision` because witness construction
  // accumulates interpolation round-off.
  double acceptance = 1e-6;
  // Largest supported polynomial degree; monomial conversion conditioning
  // degrades beyond ~10.
  int max_degree = 10;
};

}  // namespace polysel
