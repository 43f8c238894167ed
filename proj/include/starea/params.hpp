#pragma once

#include <cstdint>
#include <string>

#include "starea/errors.hpp"

namespace starea {

// Parameter pair (alpha, beta) selecting one family member class:
// 0 < alpha <= 1 (subordination strength), 0 <= beta < 1 (order).
// Validated on construction so downstream code can assume the ranges.
struct FamilyParams {
  double alpha;
  double beta;

  FamilyParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
      throw BadParameter("alpha must lie in (0, 1], got " + std::to_string(alpha_));
    if (!(beta >= 0.0) || !(beta < 1.0))
      throw BadParameter("beta must lie in [0, 1), got " + std::to_string(beta_));
  }
};

// Exact rational p/q on int64, used by the exact multiplier solver to take
// parameters without any binary-float rounding. Kept minimal: construction,
// reduction, and parsing of "p/q" or decimal strings ("0.8" -> 4/5).
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d);

  // Accepts "3/4", "1", "0.8", "-0.125". Throws BadParameter on anything else
  // or on overflow (decimal strings longer than 18 digits).
  static Fraction parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace starea
