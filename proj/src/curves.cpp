#include "starea/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace starea {

Complex extremal_eval(const FamilyParams& params, ExtremalChoice which, Complex z) {
  if (!(std::abs(z) <= 1.0)) throw BadParameter("evaluation point must satisfy |z| <= 1");
  const Complex base = Complex(1.0) - params.alpha * z;
  const double gamma = 2.0 * (1.0 - params.beta);
  if (which == ExtremalChoice::g) return std::pow(base, gamma);
  if (std::abs(base) <= 1e-14)
    throw EvaluationFailure("extremal map has a pole at this boundary point");
  return z * std::pow(base, -gamma);
}

std::vector<CurvePoint> boundary_curve(const FamilyParams& params, ExtremalChoice which,
                                       double r, int segments, double rotation) {
  if (!(r > 0.0) || !(r <= 1.0)) throw RadiusOutOfRange("radius must lie in (0, 1]");
  if (segments < 3) throw BadParameter("a closed curve needs at least 3 segments");

  std::vector<CurvePoint> points;
  points.reserve(segments + 1);
  const Complex spin = std::polar(1.0, -rotation);
  for (int j = 0; j <= segments; ++j) {
    // exact closure: reuse theta = 0 for the final point instead of trusting
    // 2 pi j / segments to come back around bit-exactly
    const double theta =
        (j == segments) ? 0.0 : 2.0 * std::numbers::pi * j / segments;
    const Complex z = std::polar(r, theta + rotation);
    points.push_back({j == segments ? 2.0 * std::numbers::pi : theta,
                      spin * extremal_eval(params, which, z)});
  }
  return points;
}

std::string curve_csv(std::span<const CurvePoint> points) {
  std::string out = "theta,re,im\n";
  char line[128];
  for (const CurvePoint& p : points) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", p.theta, p.value.real(),
                  p.value.imag());
    out += line;
  }
  return out;
}

std::string curve_svg(std::span<const CurvePoint> points) {
  if (points.empty()) throw BadParameter("cannot plot an empty curve");

  double xmin = points[0].value.real(), xmax = xmin;
  double ymin = -points[0].value.imag(), ymax = ymin;  // y flipped to screen coords
  for (const CurvePoint& p : points) {
    xmin = std::min(xmin, p.value.real());
    xmax = std::max(xmax, p.value.real());
    ymin = std::min(ymin, -p.value.imag());
    ymax = std::max(ymax, -p.value.imag());
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double margin = 0.05 * span;
  const double width = (xmax - xmin) + 2.0 * margin;
  const double height = (ymax - ymin) + 2.0 * margin;

  char buf[192];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                "viewBox=\"%.6g %.6g %.6g %.6g\" width=\"512\" height=\"512\" "
                "preserveAspectRatio=\"xMidYMid meet\">\n",
                xmin - margin, ymin - margin, width, height);
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<path fill=\"none\" stroke=\"black\" stroke-width=\"%.6g\" d=\"", 0.005 * span);
  out += buf;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%c%.6g %.6g", i == 0 ? 'M' : 'L', points[i].value.real(),
                  -points[i].value.imag());
    out += buf;
    if (i + 1 < points.size()) out += ' ';
  }
  out += "\"/>\n</svg>\n";
  return out;
}

}  // namespace starea
