#pragma once

// JSON shapes for the serializable types. Complex numbers are [re, im]
// pairs; keys are lower_snake_case throughout.

#include <json.hpp>

#include "starea/area.hpp"
#include "starea/family.hpp"
#include "starea/series.hpp"
#include "starea/verify.hpp"

namespace starea {

inline nlohmann::json to_json(const TruncatedSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return {{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.empty())
    throw BadParameter("series JSON needs a non-empty \"coeffs\" array");
  std::vector<Complex> a;
  a.reserve(coeffs.size());
  for (const auto& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2)
      throw BadParameter("series coefficients must be [re, im] pairs");
    a.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  TruncatedSeries f(std::move(a));
  if (j.contains("order") && j.at("order").get<int>() != f.order())
    throw BadParameter("series JSON \"order\" disagrees with the coefficient count");
  return f;
}

inline nlohmann::json to_json(const AreaResult& r) {
  return {{"value", r.value}, {"tail_estimate", r.tail_estimate}, {"order_used", r.order_used}};
}

inline nlohmann::json to_json(const MembershipReport& r) {
  return {{"pass", r.pass},
          {"max_ratio", r.max_ratio},
          {"argmax_z", {r.argmax_z.real(), r.argmax_z.imag()}},
          {"threshold", r.threshold},
          {"margin", r.margin},
          {"grid", {{"radii", r.radii_used}, {"angles", r.angles}}}};
}

inline nlohmann::json to_json(const LambdaSolution& s) {
  return {{"n", s.n},
          {"alpha", s.params.alpha},
          {"beta", s.params.beta},
          {"rho", s.rho},
          {"lambda", s.lambda},
          {"max_residual", s.max_residual}};
}

inline nlohmann::json to_json(const ExactLambdaSolution& s) {
  return {{"n", s.n},
          {"lambda_exact", s.lambda},
          {"lambda_values", s.lambda_values},
          {"all_positive", s.all_positive},
          {"residuals_zero", s.residuals_zero}};
}

inline nlohmann::json to_json(const SampleOutcome& s) {
  return {{"index", s.index},
          {"unimodular_constant", s.unimodular_constant},
          {"max_ratio", s.max_ratio},
          {"min_margin", s.min_margin},
          {"violation", s.violation}};
}

inline nlohmann::json to_json(const TrialReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const SampleOutcome& s : r.samples) samples.push_back(to_json(s));
  return {{"alpha", r.params.alpha},
          {"beta", r.params.beta},
          {"rho_grid", r.rho_grid},
          {"n_samples", r.n_samples},
          {"seed", r.seed},
          {"order_used", r.order_used},
          {"slack", r.slack},
          {"violations", r.violations},
          {"max_ratio", r.max_ratio},
          {"argmax_index", r.argmax_index},
          {"argmax_unimodular", r.argmax_unimodular},
          {"samples", std::move(samples)}};
}

}  // namespace starea
