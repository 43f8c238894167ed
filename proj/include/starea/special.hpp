#pragma once

#include "starea/params.hpp"

namespace starea {

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1. n >= 0.
double pochhammer(double a, int n);

struct HyperParams {
  double a;
  double b;
  double c;
  double x;
};

struct Gauss2F1Result {
  double value;
  double error_estimate;  // bound on the dropped tail, 0 for terminating series
  int terms;              // number of terms summed (including the leading 1)
};

// Gauss hypergeometric sum_{k>=0} (a)_k (b)_k / ((c)_k k!) x^k by direct
// summation with the term-ratio recurrence. Domain: 0 <= x < 1, or x = 1 when
// the series terminates (a or b a non-positive integer) or c - a - b > 0.
// Stops once |term| <= tol * |sum| and terms are non-increasing; term cap
// 100000 (DivergentSeries beyond it). BadParameter if x is outside [0, 1] or
// the (c)_k factor vanishes before termination.
Gauss2F1Result gauss_2f1(const HyperParams& p, double tol = 1e-14);

// Largest area integral over the class at radius rho in (0, 1]:
//   4 pi alpha^2 (1-beta)^2 rho^2 * 2F1(2 beta - 1, 2 beta - 1; 2; alpha^2 rho^2).
// tol is forwarded to the hypergeometric sum (looser values help at the
// slowly converging corner alpha = 1, rho = 1).
double max_area(const FamilyParams& params, double rho, double tol = 1e-14);

// Closed form of the same quantity at beta = 0:
//   2 pi alpha^2 rho^2 (2 + alpha^2 rho^2).
double max_area_beta0(double alpha, double rho);

}  // namespace starea
