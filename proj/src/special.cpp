#include "starea/special.hpp"

#include <cmath>
#include <numbers>

#include "starea/errors.hpp"

namespace starea {

namespace {

constexpr int kTermCap = 100000;

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Index k (0-based) at which the factor (v + k) in the term recurrence hits
// zero, or -1 if it never does.
int vanishing_index(double v) {
  return is_nonpositive_integer(v) ? static_cast<int>(-v) : -1;
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw BadParameter("pochhammer needs n >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

Gauss2F1Result gauss_2f1(const HyperParams& p, double tol) {
  if (!(tol > 0.0)) throw BadParameter("tolerance must be positive");
  if (!(p.x >= 0.0) || !(p.x <= 1.0))
    throw BadParameter("hypergeometric argument must lie in [0, 1]");

  const int terminate_a = vanishing_index(p.a);
  const int terminate_b = vanishing_index(p.b);
  int terminates_at = -1;  // first k with (a)_k (b)_k factor zero
  if (terminate_a >= 0) terminates_at = terminate_a;
  if (terminate_b >= 0 && (terminates_at < 0 || terminate_b < terminates_at))
    terminates_at = terminate_b;

  const int c_vanishes_at = vanishing_index(p.c);
  if (c_vanishes_at >= 0 && (terminates_at < 0 || c_vanishes_at < terminates_at))
    throw BadParameter("lower parameter hits a non-positive integer before the series terminates");

  if (p.x == 1.0 && terminates_at < 0 && !(p.c - p.a - p.b > 0.0))
    throw DivergentSeries("series diverges at x = 1 (c - a - b <= 0 and no termination)");

  double sum = 1.0;
  double term = 1.0;
  int k = 0;
  while (true) {
    if (terminates_at >= 0 && k >= terminates_at) {
      return {sum, 0.0, k + 1};
    }
    if (k >= kTermCap)
      throw DivergentSeries("hypergeometric sum did not reach the tolerance within the term cap");
    const double next =
        term * (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * p.x;
    sum += next;
    const bool small = std::abs(next) <= tol * std::abs(sum);
    const bool decaying = std::abs(next) <= std::abs(term);
    term = next;
    ++k;
    if (small && decaying) break;
  }

  // Tail bound: for x < 1 the term ratios settle below x (they tend to x),
  // so a geometric extension of the last term covers the remainder; at x = 1
  // the terms decay like k^{a+b-c-1} and the tail is ~ term * k/(c-a-b).
  double estimate;
  if (p.x < 1.0)
    estimate = std::abs(term) * p.x / (1.0 - p.x);
  else
    estimate = std::abs(term) * k / (p.c - p.a - p.b);
  return {sum, estimate, k + 1};
}

double max_area(const FamilyParams& params, double rho, double tol) {
  if (!(rho > 0.0) || !(rho <= 1.0)) throw RadiusOutOfRange("rho must lie in (0, 1]");
  const double a2r2 = params.alpha * params.alpha * rho * rho;
  const double one_minus_beta = 1.0 - params.beta;
  const Gauss2F1Result f = gauss_2f1(
      {2.0 * params.beta - 1.0, 2.0 * params.beta - 1.0, 2.0, a2r2}, tol);
  return 4.0 * std::numbers::pi * params.alpha * params.alpha * one_minus_beta * one_minus_beta *
         rho * rho * f.value;
}

double max_area_beta0(double alpha, double rho) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) throw BadParameter("alpha must lie in (0, 1]");
  if (!(rho > 0.0) || !(rho <= 1.0)) throw RadiusOutOfRange("rho must lie in (0, 1]");
  const double a2r2 = alpha * alpha * rho * rho;
  return 2.0 * std::numbers::pi * a2r2 * (2.0 + a2r2);
}

}  // namespace starea
