#pragma once

#include <span>
#include <string>
#include <vector>

#include "starea/params.hpp"
#include "starea/series.hpp"

namespace starea {

enum class ExtremalChoice { k, g };

struct CurvePoint {
  double theta = 0.0;
  Complex value{};
};

// Closed-form value of the extremal member k (or its reciprocal factor
// g = z/k) at a point of the open disk, via the principal branch of
// (1 - alpha z)^gamma; Re(1 - alpha z) > 0 there, so the branch is safe.
Complex extremal_eval(const FamilyParams& params, ExtremalChoice which, Complex z);

// Image of the circle |z| = r: segments+1 points (closed: last = first angle
// 2 pi), theta_j = 2 pi j / segments. A nonzero rotation angle plots the
// rotated member e^{-i theta0} F(e^{i theta0} z). r in (0, 1]; r = 1 is fine
// for the closed forms except k at alpha = 1, theta = 0 (pole), which raises
// EvaluationFailure.
std::vector<CurvePoint> boundary_curve(const FamilyParams& params, ExtremalChoice which,
                                       double r, int segments = 360, double rotation = 0.0);

// CSV with header "theta,re,im", one row per point, full double precision.
std::string curve_csv(std::span<const CurvePoint> points);

// Minimal standalone SVG: a single polyline path of the curve, viewBox from
// the data bounds plus a 5% margin, y axis flipped to screen orientation.
std::string curve_svg(std::span<const CurvePoint> points);

}  // namespace starea
