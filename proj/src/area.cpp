#include "starea/area.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace starea {

AreaResult area_series(const TruncatedSeries& f, double r) {
  if (!(r > 0.0) || !(r <= 1.0)) throw RadiusOutOfRange("radius must lie in (0, 1]");
  const int order = f.order();
  const double r2 = r * r;
  double sum = 0.0;
  double rpow = 1.0;  // r^{2n}
  double last = 0.0;
  for (int n = 1; n <= order; ++n) {
    rpow *= r2;
    last = n * std::norm(f.coeff(n)) * rpow;
    sum += last;
  }

  AreaResult result;
  result.order_used = order;
  result.value = std::numbers::pi * sum;
  result.tail_estimate = std::numbers::pi * last;
  return result;
}

double area_quadrature(const TruncatedSeries& f, double r, int radial_nodes,
                       int angular_nodes) {
  if (!(r > 0.0) || !(r <= 0.99))
    throw RadiusOutOfRange("quadrature radius must lie in (0, 0.99]");
  if (radial_nodes < 1 || angular_nodes < 1) throw BadParameter("node counts must be positive");

  const TruncatedSeries fp = derivative(f);
  // integral over the disk of |f'|^2: midpoint in r, trapezoid in theta
  // (periodic, so plain averaging of the angular samples).
  double total = 0.0;
  const double dr = r / radial_nodes;
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  for (int i = 0; i < radial_nodes; ++i) {
    const double s = (i + 0.5) * dr;
    double ring = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
      ring += std::norm(fp(std::polar(s, j * dtheta)));
    }
    total += ring * s;
  }
  return total * dr * dtheta;
}

AreaResult area_z_over_f(const TruncatedSeries& f, double r) {
  if (!f.is_normalized()) throw NotNormalized("z/f needs a normalized map");
  return area_series(reciprocal(shifted_down(f)), r);
}

DirichletResult dirichlet_finite(const TruncatedSeries& f, double tol) {
  const int order = f.order();
  DirichletResult result;
  double sum = 0.0;
  double tail = 0.0;
  const int tail_start = order - std::max(1, order / 10) + 1;  // last decade of indices
  for (int n = 1; n <= order; ++n) {
    const double term = n * std::norm(f.coeff(n));
    sum += term;
    if (n >= tail_start) tail += term;
  }
  result.partial_sum = std::numbers::pi * sum;
  result.finite = sum == 0.0 ? true : (tail <= tol * sum);
  return result;
}

}  // namespace starea
