#pragma once

#include <complex>
#include <span>
#include <vector>

#include "starea/errors.hpp"

namespace starea {

using Complex = std::complex<double>;

// Magnitude below which a constant term counts as zero for divisions and
// normalization checks.
inline constexpr double kConstantTermTol = 1e-12;

// Polynomial truncation of a power series: coefficients a_0..a_N of
// sum a_n z^n, N = order. Coefficients are complex doubles and must be finite.
//
// Binary operations truncate to the smaller order of the two operands; degrees
// beyond it would be incomplete in the product anyway, and keeping them would
// silently mix exact and truncated coefficients.
class TruncatedSeries {
public:
  TruncatedSeries() : coeffs_(1, Complex(0.0)) {}
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(Complex value, int order = 0);
  static TruncatedSeries identity(int order);  // the map z

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  // Coefficient of z^n; zero outside the stored range.
  Complex coeff(int n) const;

  // f(0) = 0 and f'(0) = 1, both within kConstantTermTol.
  bool is_normalized() const;

  // Horner evaluation of the truncation at a point.
  Complex operator()(Complex z) const;

private:
  std::vector<Complex> coeffs_;  // never empty
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(Complex scale, const TruncatedSeries& f);

// 1/f by the convolution recurrence; requires |a_0| > kConstantTermTol.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// Termwise derivative (order drops by one) and antiderivative with constant 0
// (order grows by one).
TruncatedSeries derivative(const TruncatedSeries& f);
TruncatedSeries integrate(const TruncatedSeries& f);

// log f for series with constant term 1 (within kConstantTermTol), via the
// recurrence obtained from (log f)' f = f'. exp is its inverse, defined for
// any finite constant term.
TruncatedSeries log(const TruncatedSeries& f);
TruncatedSeries exp(const TruncatedSeries& f);

// f^gamma = exp(gamma log f) for real gamma; same normalization as log.
TruncatedSeries pow(const TruncatedSeries& f, double gamma);

// Disk rotation e^{-i theta} f(e^{i theta} z) of a normalized map:
// a_n -> a_n e^{i (n-1) theta}. Keeps normalization; requires it.
TruncatedSeries rotate(const TruncatedSeries& f, double theta);

// Cut or zero-pad to exactly the requested order.
TruncatedSeries truncated(const TruncatedSeries& f, int order);

// Multiply by z / divide by z. Division requires |a_0| <= kConstantTermTol.
TruncatedSeries shifted_up(const TruncatedSeries& f);
TruncatedSeries shifted_down(const TruncatedSeries& f);

}  // namespace starea
