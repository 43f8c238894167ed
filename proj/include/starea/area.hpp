#pragma once

#include "starea/params.hpp"
#include "starea/series.hpp"

namespace starea {

struct AreaResult {
  double value = 0.0;          // pi * sum n |a_n|^2 r^{2n}
  double tail_estimate = 0.0;  // magnitude of the last retained term pi N |a_N|^2 r^{2N}
  int order_used = 0;
};

// Counting-area integral of f over |z| < r from the coefficients:
// pi sum_{n>=1} n |a_n|^2 r^{2n}. r in (0, 1]. The tail diagnostic is the
// last retained term; callers that need more certainty raise the order until
// it is negligible against the value.
AreaResult area_series(const TruncatedSeries& f, double r);

// Same integral as integral |f'|^2 dA on a polar grid (midpoint rule in the
// radius, trapezoid in the angle; the latter is spectrally accurate for the
// periodic direction). Independent of area_series except for the evaluation
// of f'. r <= 0.99: the grid cannot see a boundary singularity.
double area_quadrature(const TruncatedSeries& f, double r, int radial_nodes = 400,
                       int angular_nodes = 1024);

// Area of z/f for a normalized member f (the quantity the family bound is
// about). Equivalent to area_series(reciprocal(shifted_down(f)), r).
AreaResult area_z_over_f(const TruncatedSeries& f, double r);

// Heuristic finite-Dirichlet-integral check at r = 1: the series
// sum n |a_n|^2 converges iff the partial sums stabilize; decided by whether
// the last decade of computed terms contributes less than tol relative to the
// total. Returns the partial sum and the verdict.
struct DirichletResult {
  double partial_sum = 0.0;
  bool finite = false;
};
DirichletResult dirichlet_finite(const TruncatedSeries& f, double tol = 1e-6);

}  // namespace starea
