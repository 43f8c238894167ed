#include "starea/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "starea/area.hpp"
#include "starea/special.hpp"

namespace starea {

namespace {

// Cross coefficient C_k = k^2 - (k - 2(1-beta))^2 alpha^2 rho^2 of the
// inequality and of the multiplier system.
double cross_coefficient(int k, const FamilyParams& params, double rho) {
  const double shift = k - 2.0 * (1.0 - params.beta);
  const double a2r2 = params.alpha * params.alpha * rho * rho;
  return static_cast<double>(k) * k - shift * shift * a2r2;
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !(rho <= 1.0)) throw RadiusOutOfRange("rho must lie in (0, 1]");
}

}  // namespace

ClunieResult clunie_inequality(std::span<const Complex> b, const FamilyParams& params,
                               double rho, int n) {
  check_rho(rho);
  if (n < 1 || static_cast<std::size_t>(n) > b.size())
    throw BadParameter("cut index must lie in 1..length(b)");
  const double r2 = rho * rho;
  double rpow = 1.0;  // rho^{2k}
  double lhs = 0.0;
  for (int k = 1; k < n; ++k) {
    rpow *= r2;
    lhs += cross_coefficient(k, params, rho) * std::norm(b[k - 1]) * rpow;
  }
  rpow *= r2;
  lhs += static_cast<double>(n) * n * std::norm(b[n - 1]) * rpow;

  const double omb = 1.0 - params.beta;
  return {lhs, 4.0 * omb * omb * params.alpha * params.alpha * r2};
}

LambdaSolution solve_lambda(int n, const FamilyParams& params, double rho) {
  if (n < 1) throw BadParameter("system size must be >= 1");
  check_rho(rho);

  LambdaSolution sol{n, params, rho, std::vector<double>(n), 0.0};
  // k = k^2 lambda_k + C_k T_k with T_k = sum_{m>k} lambda_m: walk k = N..1
  // keeping the suffix sum, so the triangular solve is O(N).
  double suffix = 0.0;
  for (int k = n; k >= 1; --k) {
    const double k2 = static_cast<double>(k) * k;
    sol.lambda[k - 1] = (k - cross_coefficient(k, params, rho) * suffix) / k2;
    suffix += sol.lambda[k - 1];
  }

  // residuals recomputed forward with fresh suffix sums
  suffix = 0.0;
  for (int k = n; k >= 1; --k) {
    const double k2 = static_cast<double>(k) * k;
    const double resid =
        std::abs(k2 * sol.lambda[k - 1] + cross_coefficient(k, params, rho) * suffix - k) / k;
    sol.max_residual = std::max(sol.max_residual, resid);
    suffix += sol.lambda[k - 1];
  }
  return sol;
}

ExactLambdaSolution solve_lambda_exact(int n, const Fraction& alpha, const Fraction& beta,
                                       const Fraction& rho) {
  using Rational = boost::multiprecision::cpp_rational;
  if (n < 1 || n > 20) throw BadParameter("exact mode supports 1 <= N <= 20");
  const Rational a(alpha.num, alpha.den);
  const Rational b(beta.num, beta.den);
  const Rational r(rho.num, rho.den);
  if (!(a > 0 && a <= 1)) throw BadParameter("alpha must lie in (0, 1]");
  if (!(b >= 0 && b < 1)) throw BadParameter("beta must lie in [0, 1)");
  if (!(r > 0 && r <= 1)) throw RadiusOutOfRange("rho must lie in (0, 1]");

  const Rational a2r2 = a * a * r * r;
  auto cross = [&](int k) {
    const Rational shift = k - 2 * (1 - b);
    return Rational(k) * k - shift * shift * a2r2;
  };

  std::vector<Rational> lambda(n);
  Rational suffix = 0;
  for (int k = n; k >= 1; --k) {
    lambda[k - 1] = (Rational(k) - cross(k) * suffix) / (Rational(k) * k);
    suffix += lambda[k - 1];
  }

  ExactLambdaSolution sol;
  sol.n = n;
  sol.all_positive = true;
  sol.residuals_zero = true;
  suffix = 0;
  for (int k = n; k >= 1; --k) {
    if (!(lambda[k - 1] > 0)) sol.all_positive = false;
    if (Rational(k) * k * lambda[k - 1] + cross(k) * suffix != Rational(k))
      sol.residuals_zero = false;
    suffix += lambda[k - 1];
  }
  for (const Rational& l : lambda) {
    sol.lambda.push_back(l.str());
    sol.lambda_values.push_back(static_cast<double>(l));
  }
  return sol;
}

double recombination_identity_check(const LambdaSolution& sol, std::span<const Complex> b) {
  if (b.size() < static_cast<std::size_t>(sol.n))
    throw BadParameter("coefficient sequence shorter than the system size");
  const double r2 = sol.rho * sol.rho;

  // sum_n lambda_n LHS_n(b), accumulating the shared prefix of the LHS terms
  double combined = 0.0;
  double prefix = 0.0;  // sum_{j<k} C_j |b_j|^2 rho^{2j}
  double rpow = 1.0;
  for (int k = 1; k <= sol.n; ++k) {
    rpow *= r2;
    const double weight = std::norm(b[k - 1]) * rpow;
    combined += sol.lambda[k - 1] * (prefix + static_cast<double>(k) * k * weight);
    prefix += cross_coefficient(k, sol.params, sol.rho) * weight;
  }

  double direct = 0.0;
  rpow = 1.0;
  for (int k = 1; k <= sol.n; ++k) {
    rpow *= r2;
    direct += k * std::norm(b[k - 1]) * rpow;
  }
  return std::abs(combined - direct);
}

DominanceReport dominance_check(const TruncatedSeries& f, const FamilyParams& params,
                                double rho, int n) {
  check_rho(rho);
  if (n < 1) throw BadParameter("cut index must be >= 1");
  const TruncatedSeries b = reciprocal(shifted_down(f));
  const TruncatedSeries c = extremal_reciprocal(params, n);
  if (b.order() < n)
    throw BadParameter("series order too small for the requested cut index");

  const double r2 = rho * rho;
  DominanceReport report;
  report.n = n;
  report.rho = rho;
  double rpow = 1.0;
  for (int k = 1; k <= n; ++k) {
    rpow *= r2;
    report.lhs += k * std::norm(b.coeff(k)) * rpow;
    report.rhs += k * std::norm(c.coeff(k)) * rpow;
  }
  report.margin = report.rhs - report.lhs;
  return report;
}

namespace {

SampleOutcome evaluate_sample(const FamilyParams& params, std::span<const double> rho_grid,
                              std::span<const double> bounds, std::uint64_t seed,
                              std::uint64_t index, int order, double slack,
                              const SamplerConfig& sampler) {
  const SchwarzSpec spec = sample_schwarz(seed, index, sampler);
  const TruncatedSeries g = synthesize_member_reciprocal(spec, params, order);

  SampleOutcome out;
  out.index = index;
  out.unimodular_constant = spec.is_unimodular_constant();
  out.max_ratio = 0.0;
  out.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    const double delta = area_series(g, rho_grid[i]).value;
    const double bound = bounds[i];
    out.max_ratio = std::max(out.max_ratio, delta / bound);
    out.min_margin = std::min(out.min_margin, bound - delta);
    if (delta > bound + slack) out.violation = true;
  }
  return out;
}

}  // namespace

TrialReport conjecture_trial(const FamilyParams& params, std::span<const double> rho_grid,
                             int n_samples, std::uint64_t seed, const TrialOptions& options) {
  if (n_samples < 1) throw BadParameter("need at least one sample");
  if (rho_grid.empty()) throw BadParameter("rho grid must be non-empty");
  for (double rho : rho_grid)
    if (!(rho > 0.0) || !(rho < 1.0)) throw RadiusOutOfRange("trial radii must lie in (0, 1)");

  const double rho_max = *std::max_element(rho_grid.begin(), rho_grid.end());
  int order = options.order;
  if (order == 0) order = rho_max > 0.9 ? 256 : 64;

  std::vector<double> bounds;
  bounds.reserve(rho_grid.size());
  for (double rho : rho_grid) bounds.push_back(max_area(params, rho));

  TrialReport report{params};
  report.rho_grid.assign(rho_grid.begin(), rho_grid.end());
  report.n_samples = n_samples;
  report.seed = seed;
  report.order_used = order;
  report.slack = options.slack;
  report.samples.resize(n_samples);

  int workers = options.workers > 0 ? options.workers
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n_samples);

  auto run_chunk = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      report.samples[i] = evaluate_sample(params, rho_grid, bounds, seed,
                                          static_cast<std::uint64_t>(i), order, options.slack,
                                          options.sampler);
  };

  if (workers == 1) {
    run_chunk(0, n_samples);
  } else {
    std::vector<std::future<void>> futures;
    const int chunk = (n_samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int from = w * chunk;
      const int to = std::min(n_samples, from + chunk);
      if (from >= to) break;
      futures.push_back(std::async(std::launch::async, run_chunk, from, to));
    }
    for (auto& f : futures) f.get();
  }

  // deterministic merge: outcomes live at their own index, scan in order
  report.max_ratio = -std::numeric_limits<double>::infinity();
  for (const SampleOutcome& out : report.samples) {
    if (out.violation) ++report.violations;
    if (out.max_ratio > report.max_ratio) {
      report.max_ratio = out.max_ratio;
      report.argmax_index = out.index;
      report.argmax_unimodular = out.unimodular_constant;
    }
  }
  return report;
}

bool rho_small_regime_check(const FamilyParams& params, double rho, int n) {
  (void)params;  // the weight sequence does not involve the class parameters
  check_rho(rho);
  if (n < 1) throw BadParameter("need at least one index");
  const double r2 = rho * rho;
  double rpow = r2;  // rho^{2k}
  for (int k = 1; k <= n; ++k) {
    const double here = k * rpow;
    rpow *= r2;
    const double next = (k + 1) * rpow;
    // relative slack: the rho = 1/sqrt(2) boundary is an exact tie at k = 1
    // that one ulp of sqrt rounding would otherwise flip
    if (here < next * (1.0 - 1e-12)) return false;
  }
  return true;
}

}  // namespace starea
