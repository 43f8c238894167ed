#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "starea/family.hpp"
#include "starea/params.hpp"
#include "starea/series.hpp"

namespace starea {

// Both sides of the coefficient inequality at cut index n (rho-scaled form):
//   sum_{k<n} (k^2 - (k - 2(1-beta))^2 alpha^2 rho^2) |b_k|^2 rho^{2k}
//     + n^2 |b_n|^2 rho^{2n}   vs   4 (1-beta)^2 alpha^2 rho^2,
// where b holds b_1..b_m (b[i] = b_{i+1}) from z/f = 1 + sum b_k z^k.
struct ClunieResult {
  double lhs = 0.0;
  double bound = 0.0;
};
ClunieResult clunie_inequality(std::span<const Complex> b, const FamilyParams& params,
                               double rho, int n);

// Multipliers lambda_{k,N} solving the triangular system
//   k = k^2 lambda_k + C_k sum_{n>k} lambda_n,
//   C_k = k^2 - (k - 2(1-beta))^2 alpha^2 rho^2,
// by back-substitution from k = N. The cross coefficient C_k does not depend
// on the column, so a running suffix sum gives the whole solve in O(N).
struct LambdaSolution {
  int n = 0;
  FamilyParams params;
  double rho = 0.0;
  std::vector<double> lambda;  // lambda[k-1] = lambda_{k,N}; lambda_{N,N} = 1/N exactly
  double max_residual = 0.0;   // max_k |equation k residual| / k
};
LambdaSolution solve_lambda(int n, const FamilyParams& params, double rho);

// Exact-rational re-solve of the same system (N <= 20) with alpha, beta, rho
// given as fractions, certifying positivity with no rounding doubt. The
// lambda values come back as reduced fraction strings.
struct ExactLambdaSolution {
  int n = 0;
  std::vector<std::string> lambda;  // reduced "p/q"
  std::vector<double> lambda_values;
  bool all_positive = false;
  bool residuals_zero = false;  // every equation re-checked exactly
};
ExactLambdaSolution solve_lambda_exact(int n, const Fraction& alpha, const Fraction& beta,
                                       const Fraction& rho);

// | sum_n lambda_n * LHS_n(b)  -  sum_k k |b_k|^2 rho^{2k} |, the defining
// property of the multiplier system (must vanish identically). length(b) >= N.
double recombination_identity_check(const LambdaSolution& sol, std::span<const Complex> b);

// Partial-sum comparison sum k |b_k|^2 rho^{2k} <= sum k |c_k|^2 rho^{2k}
// (k = 1..N) between a member f and the extremal, b from z/f, c from the
// extremal's z/k.
struct DominanceReport {
  int n = 0;
  double rho = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
};
DominanceReport dominance_check(const TruncatedSeries& f, const FamilyParams& params,
                                double rho, int n);

struct SampleOutcome {
  std::uint64_t index = 0;
  bool unimodular_constant = false;
  double max_ratio = 0.0;  // max over the rho grid of area / bound
  double min_margin = 0.0;  // min over the rho grid of bound - area
  bool violation = false;   // area > bound + slack somewhere
};

struct TrialReport {
  FamilyParams params;
  std::vector<double> rho_grid;
  int n_samples = 0;
  std::uint64_t seed = 0;
  int order_used = 0;
  double slack = 0.0;
  int violations = 0;
  double max_ratio = 0.0;
  std::uint64_t argmax_index = 0;
  bool argmax_unimodular = false;
  std::vector<SampleOutcome> samples;
};

struct TrialOptions {
  int order = 0;       // 0: 64, raised to 256 when the grid reaches past 0.9
  double slack = 1e-8;  // additive tolerance on the area comparison
  SamplerConfig sampler{};
  int workers = 0;  // 0: hardware concurrency
};

// Seeded sampling trial of the maximum-area bound: for each sampled w,
// synthesizes the member and checks the area of z/f against the class bound
// at every rho in the grid (each in (0, 1)). Samples are split across workers
// and merged by index, so the report does not depend on scheduling.
TrialReport conjecture_trial(const FamilyParams& params, std::span<const double> rho_grid,
                             int n_samples, std::uint64_t seed, const TrialOptions& options = {});

// True iff n rho^{2n} >= (n+1) rho^{2n+2} holds for n = 1..N, i.e. the weight
// sequence is non-increasing; equivalent to rho <= 1/sqrt(2) (checked with a
// 1e-12 relative slack: the boundary case is an exact tie that one ulp of
// sqrt rounding would otherwise flip).
bool rho_small_regime_check(const FamilyParams& params, double rho, int n);

}  // namespace starea
