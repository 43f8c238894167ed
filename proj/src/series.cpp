#include "starea/series.hpp"

#include <algorithm>
#include <cmath>

namespace starea {

namespace {

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw BadParameter("series needs at least the constant term");
  for (const Complex& c : coeffs_)
    if (!finite(c)) throw BadParameter("series coefficients must be finite");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw BadParameter("order must be non-negative");
  return TruncatedSeries(std::vector<Complex>(order + 1, Complex(0.0)));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
  TruncatedSeries f = zero(order);
  f.coeffs_[0] = value;
  if (!finite(value)) throw BadParameter("series coefficients must be finite");
  return f;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw BadParameter("the map z needs order >= 1");
  TruncatedSeries f = zero(order);
  f.coeffs_[1] = Complex(1.0);
  return f;
}

Complex TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order()) return Complex(0.0);
  return coeffs_[n];
}

bool TruncatedSeries::is_normalized() const {
  return order() >= 1 && std::abs(coeffs_[0]) <= kConstantTermTol &&
         std::abs(coeffs_[1] - Complex(1.0)) <= kConstantTermTol;
}

Complex TruncatedSeries::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (int n = order() - 1; n >= 0; --n) acc = acc * z + coeffs_[n];
  return acc;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f.coeff(k) + g.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f.coeff(k) - g.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Complex> c(n + 1, Complex(0.0));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) c[k] += f.coeff(j) * g.coeff(k - j);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex scale, const TruncatedSeries& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (Complex& x : c) x *= scale;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const Complex a0 = f.coeff(0);
  if (std::abs(a0) <= kConstantTermTol)
    throw NearZeroConstantTerm("cannot invert a series with (near-)zero constant term");
  const int n = f.order();
  std::vector<Complex> b(n + 1);
  b[0] = Complex(1.0) / a0;
  for (int k = 1; k <= n; ++k) {
    Complex s(0.0);
    for (int j = 1; j <= k; ++j) s += f.coeff(j) * b[k - j];
    b[k] = -s / a0;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  const int n = f.order();
  if (n == 0) return TruncatedSeries::zero(0);
  std::vector<Complex> c(n);
  for (int k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * f.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<Complex> c(n + 2, Complex(0.0));
  for (int k = 0; k <= n; ++k) c[k + 1] = f.coeff(k) / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries log(const TruncatedSeries& f) {
  const Complex a0 = f.coeff(0);
  if (std::abs(a0 - Complex(1.0)) > kConstantTermTol)
    throw NotNormalized("log needs constant term 1");
  const int n = f.order();
  std::vector<Complex> l(n + 1);
  l[0] = std::log(a0);  // ~0; kept so log is the exact inverse of exp
  for (int k = 1; k <= n; ++k) {
    // from (log f)' f = f': k a_k = sum_{j=1}^{k} j l_j a_{k-j}
    Complex s(0.0);
    for (int j = 1; j < k; ++j) s += static_cast<double>(j) * l[j] * f.coeff(k - j);
    l[k] = (static_cast<double>(k) * f.coeff(k) - s) / (static_cast<double>(k) * a0);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries exp(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<Complex> e(n + 1);
  e[0] = std::exp(f.coeff(0));
  for (int k = 1; k <= n; ++k) {
    // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    Complex s(0.0);
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * f.coeff(j) * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries pow(const TruncatedSeries& f, double gamma) {
  if (!std::isfinite(gamma)) throw BadParameter("exponent must be finite");
  return exp(Complex(gamma) * log(f));
}

TruncatedSeries rotate(const TruncatedSeries& f, double theta) {
  if (!f.is_normalized()) throw NotNormalized("rotation is defined for normalized maps");
  const int n = f.order();
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = f.coeff(k) * std::polar(1.0, (k - 1) * theta);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries truncated(const TruncatedSeries& f, int order) {
  if (order < 0) throw BadParameter("order must be non-negative");
  std::vector<Complex> c(order + 1);
  for (int k = 0; k <= order; ++k) c[k] = f.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries shifted_up(const TruncatedSeries& f) {
  std::vector<Complex> c(f.order() + 2);
  c[0] = Complex(0.0);
  for (int k = 0; k <= f.order(); ++k) c[k + 1] = f.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries shifted_down(const TruncatedSeries& f) {
  if (std::abs(f.coeff(0)) > kConstantTermTol)
    throw NotNormalized("division by z needs a vanishing constant term");
  if (f.order() == 0) return TruncatedSeries::zero(0);
  std::vector<Complex> c(f.order());
  for (int k = 1; k <= f.order(); ++k) c[k - 1] = f.coeff(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace starea
