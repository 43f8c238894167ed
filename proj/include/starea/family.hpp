#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starea/params.hpp"
#include "starea/series.hpp"

namespace starea {

// Region that z f'/f must stay inside: a disk for alpha < 1, the half plane
// Re w > bound for alpha = 1.
struct TargetRegion {
  enum class Kind { disk, half_plane };
  Kind kind = Kind::disk;
  double center = 0.0;  // disk only (center is real)
  double radius = 0.0;  // disk only
  double bound = 0.0;   // half plane only
};

// Disk: center (1 + alpha^2 (1 - 2 beta)) / (1 - alpha^2),
//       radius 2 alpha (1 - beta) / (1 - alpha^2); half plane Re > beta at alpha = 1.
TargetRegion target_region(const FamilyParams& params);

// Extremal member k(z) = z (1 - alpha z)^{-2(1-beta)}, coefficients through
// z^{order} by the Pochhammer recurrence (not the exp/log route).
TruncatedSeries extremal_function(const FamilyParams& params, int order);

// z / k = (1 - alpha z)^{2(1-beta)}: c_n = (zeta)_n / n! alpha^n with
// zeta = -2(1-beta), through z^{order}.
TruncatedSeries extremal_reciprocal(const FamilyParams& params, int order);

// (A, B) of the generating linear fractional map (1 + A z)/(1 + B z):
// A = (1 - 2 beta) alpha, B = -alpha. Always -1 <= B < A <= 1.
std::pair<double, double> janowski_parameters(const FamilyParams& params);

// Polar sampling grid for pointwise membership checks.
struct GridSpec {
  std::vector<double> radii;  // ascending, in (0, 1)
  int angles = 360;           // equally spaced on [0, 2 pi)

  // radii {0.1, 0.2, ..., 0.9, 0.95} x 360 angles
  static GridSpec standard();
};

struct MembershipReport {
  bool pass = false;
  double max_ratio = 0.0;   // max over grid of |p - 1| / |p + 1 - 2 beta|, p = z f'/f
  Complex argmax_z{};       // grid point attaining it
  double threshold = 0.0;   // alpha
  double margin = 0.0;      // tolerance added to the threshold
  std::vector<double> radii_used;  // grid radii after the r_max cap
  int angles = 0;
};

// Samples z f'/f over the grid (radii capped at r_max) and compares the
// subordination ratio against alpha. A necessary check, not a proof: it can
// only inspect finitely many points of a truncation. EvaluationFailure if
// |f| <= 1e-12 at a node; NotNormalized unless f(0)=0, f'(0)=1; r_max < 1.
MembershipReport membership_test(const TruncatedSeries& f, const FamilyParams& params,
                                 double r_max = 0.95, const GridSpec& grid = GridSpec::standard(),
                                 double margin = 1e-9);

// Closed-form description of a unit-bound holomorphic factor w: either a
// constant with |c| <= 1 or phase * product of at most three Blaschke factors
// (z - a_j)/(1 - conj(a_j) z), |a_j| < 1. Exactly the inputs the synthesis
// and sampling routines need; |w| = 1 on the whole disk iff w is a constant
// of modulus 1, which is the equality case of the area bound.
class SchwarzSpec {
public:
  SchwarzSpec() : SchwarzSpec(constant(Complex(1.0))) {}

  static SchwarzSpec constant(Complex c);
  static SchwarzSpec blaschke(Complex phase, std::vector<Complex> zeros);

  bool is_constant() const { return zeros_.empty(); }
  bool is_unimodular_constant() const;
  // Constant value (phase_ when the zero list is empty).
  Complex constant_value() const;
  Complex phase() const { return phase_; }
  std::span<const Complex> zeros() const { return zeros_; }

  // Pointwise value (exact rational expression, |z| < 1).
  Complex operator()(Complex z) const;
  // Coefficients of w through z^{order}.
  TruncatedSeries series(int order) const;

private:
  SchwarzSpec(Complex phase, std::vector<Complex> zeros)
      : phase_(phase), zeros_(std::move(zeros)) {}

  Complex phase_;                // the constant itself when zeros_ is empty
  std::vector<Complex> zeros_;  // at most 3, all |a| < 1
};

struct SamplerConfig {
  double unimodular_probability = 0.125;  // share of |c| = 1 constants
  double constant_probability = 0.25;     // share of constants with |c| < 1
  double max_constant_modulus = 0.95;     // cap for non-unimodular constants
  double max_zero_modulus = 0.8;          // cap for Blaschke zeros
  int max_degree = 3;
  bool identity_first = true;  // index 0 always yields w == 1
};

// Deterministic sampler: the result for a given (seed, index) never changes
// and does not depend on evaluation order (each index gets its own generator).
SchwarzSpec sample_schwarz(std::uint64_t seed, std::uint64_t index,
                           const SamplerConfig& config = {});

// Member with z f'/f = (1 + (1-2 beta) alpha z w)/(1 - alpha z w) for the
// given w: f = z / g, g = exp of the antiderivative of
// -2 alpha (1-beta) w / (1 - alpha z w). Normalized by construction.
TruncatedSeries synthesize_member(const SchwarzSpec& w, const FamilyParams& params, int order);

// The factor g = z/f of the same member, computed directly (avoids the
// round trip through two reciprocals when only the z/f coefficients matter).
TruncatedSeries synthesize_member_reciprocal(const SchwarzSpec& w, const FamilyParams& params,
                                             int order);

// Order-change transform F = z (f/z)^{1/(1-beta)}, mapping the class of order
// beta onto the class of order 0 with the same alpha; its inverse is
// f = z (F/z)^{1-beta}. Requires normalized input and beta in [0, 1).
TruncatedSeries alpha_class_transform(const TruncatedSeries& f, double beta, int order);
TruncatedSeries alpha_class_transform_inverse(const TruncatedSeries& big_f, double beta, int order);

}  // namespace starea
