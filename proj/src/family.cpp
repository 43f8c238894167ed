#include "starea/family.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

namespace starea {

namespace {

constexpr double kUnimodularTol = 1e-12;

// Mixes seed and sample index into an independent generator state; the usual
// splitmix64 finalizer, applied twice so consecutive indices decorrelate.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits; fixed mapping so results do
// not depend on the standard library's distribution implementations.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

TargetRegion target_region(const FamilyParams& params) {
  TargetRegion region;
  if (params.alpha == 1.0) {
    region.kind = TargetRegion::Kind::half_plane;
    region.bound = params.beta;
    return region;
  }
  const double a2 = params.alpha * params.alpha;
  region.kind = TargetRegion::Kind::disk;
  region.center = (1.0 + a2 * (1.0 - 2.0 * params.beta)) / (1.0 - a2);
  region.radius = 2.0 * params.alpha * (1.0 - params.beta) / (1.0 - a2);
  return region;
}

TruncatedSeries extremal_reciprocal(const FamilyParams& params, int order) {
  if (order < 0) throw BadParameter("order must be non-negative");
  // c_n = (zeta)_n / n! alpha^n, zeta = -2(1-beta), via the term recurrence.
  const double zeta = -2.0 * (1.0 - params.beta);
  std::vector<Complex> c(order + 1);
  c[0] = Complex(1.0);
  double term = 1.0;
  for (int n = 1; n <= order; ++n) {
    term *= (zeta + (n - 1)) / n * params.alpha;
    c[n] = Complex(term);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries extremal_function(const FamilyParams& params, int order) {
  if (order < 1) throw BadParameter("the extremal map needs order >= 1");
  if (order == 1) return TruncatedSeries::identity(1);
  // z (1 - alpha z)^{-2(1-beta)} through the generic pow, so this route and
  // extremal_reciprocal (direct recurrence) stay independent of each other.
  const TruncatedSeries base = TruncatedSeries::constant(1.0, order - 1) -
                               Complex(params.alpha) * TruncatedSeries::identity(order - 1);
  return shifted_up(pow(base, -2.0 * (1.0 - params.beta)));
}

std::pair<double, double> janowski_parameters(const FamilyParams& params) {
  return {(1.0 - 2.0 * params.beta) * params.alpha, -params.alpha};
}

GridSpec GridSpec::standard() {
  GridSpec grid;
  grid.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  grid.angles = 360;
  return grid;
}

MembershipReport membership_test(const TruncatedSeries& f, const FamilyParams& params,
                                 double r_max, const GridSpec& grid, double margin) {
  if (!f.is_normalized()) throw NotNormalized("membership is defined for normalized maps");
  if (!(r_max > 0.0) || !(r_max < 1.0)) throw RadiusOutOfRange("r_max must lie in (0, 1)");
  if (grid.angles < 1) throw BadParameter("grid needs at least one angle");

  const TruncatedSeries fp = derivative(f);
  MembershipReport report;
  report.threshold = params.alpha;
  report.margin = margin;
  report.angles = grid.angles;
  report.max_ratio = 0.0;

  for (double r : grid.radii) {
    if (r > r_max) continue;
    report.radii_used.push_back(r);
    for (int j = 0; j < grid.angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid.angles;
      const Complex z = std::polar(r, theta);
      const Complex fz = f(z);
      if (std::abs(fz) <= 1e-12)
        throw EvaluationFailure("f vanishes on the sampling grid; the ratio z f'/f is undefined");
      const Complex p = z * fp(z) / fz;
      const double denom = std::abs(p + Complex(1.0 - 2.0 * params.beta));
      const double numer = std::abs(p - Complex(1.0));
      const double ratio =
          denom > 1e-300 ? numer / denom : std::numeric_limits<double>::infinity();
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax_z = z;
      }
    }
  }
  report.pass = report.max_ratio < params.alpha + margin;
  return report;
}

SchwarzSpec SchwarzSpec::constant(Complex c) {
  if (!(std::abs(c) <= 1.0 + kUnimodularTol))
    throw BadParameter("constant part must have modulus <= 1");
  return SchwarzSpec(c, {});
}

SchwarzSpec SchwarzSpec::blaschke(Complex phase, std::vector<Complex> zeros) {
  if (std::abs(std::abs(phase) - 1.0) > kUnimodularTol)
    throw BadParameter("phase must be unimodular");
  if (zeros.size() > 3) throw BadParameter("at most three factors supported");
  for (const Complex& a : zeros)
    if (!(std::abs(a) < 1.0)) throw BadParameter("factor zeros must lie in the open disk");
  return SchwarzSpec(phase, std::move(zeros));
}

bool SchwarzSpec::is_unimodular_constant() const {
  return zeros_.empty() && std::abs(std::abs(phase_) - 1.0) <= kUnimodularTol;
}

Complex SchwarzSpec::constant_value() const {
  if (!is_constant()) throw BadParameter("Schwarz function is not a constant");
  return phase_;
}

Complex SchwarzSpec::operator()(Complex z) const {
  Complex w = phase_;
  for (const Complex& a : zeros_) w *= (z - a) / (Complex(1.0) - std::conj(a) * z);
  return w;
}

TruncatedSeries SchwarzSpec::series(int order) const {
  TruncatedSeries w = TruncatedSeries::constant(phase_, order);
  for (const Complex& a : zeros_) {
    std::vector<Complex> num(order + 1, Complex(0.0));
    num[0] = -a;
    if (order >= 1) num[1] = Complex(1.0);
    std::vector<Complex> den(order + 1, Complex(0.0));
    den[0] = Complex(1.0);
    if (order >= 1) den[1] = -std::conj(a);
    w = w * TruncatedSeries(std::move(num)) * reciprocal(TruncatedSeries(std::move(den)));
  }
  return w;
}

SchwarzSpec sample_schwarz(std::uint64_t seed, std::uint64_t index, const SamplerConfig& config) {
  if (config.identity_first && index == 0) return SchwarzSpec::constant(Complex(1.0));
  if (config.max_degree < 1 || config.max_degree > 3)
    throw BadParameter("sampler degree must lie in 1..3");

  std::mt19937_64 gen(mix64(seed ^ mix64(index)));
  const double pick = uniform01(gen);

  if (pick < config.unimodular_probability) {
    const double phi = 2.0 * std::numbers::pi * uniform01(gen);
    return SchwarzSpec::constant(std::polar(1.0, phi));
  }
  if (pick < config.unimodular_probability + config.constant_probability) {
    const double m = config.max_constant_modulus * uniform01(gen);
    const double phi = 2.0 * std::numbers::pi * uniform01(gen);
    return SchwarzSpec::constant(std::polar(m, phi));
  }
  const int degree = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(config.max_degree));
  std::vector<Complex> zeros(degree);
  for (Complex& a : zeros) {
    // sqrt for an area-uniform radial law inside the allowed disk
    const double m = config.max_zero_modulus * std::sqrt(uniform01(gen));
    a = std::polar(m, 2.0 * std::numbers::pi * uniform01(gen));
  }
  const double phi = 2.0 * std::numbers::pi * uniform01(gen);
  return SchwarzSpec::blaschke(std::polar(1.0, phi), std::move(zeros));
}

TruncatedSeries synthesize_member_reciprocal(const SchwarzSpec& w, const FamilyParams& params,
                                             int order) {
  if (order < 0) throw BadParameter("order must be non-negative");
  const TruncatedSeries ws = w.series(order);
  const TruncatedSeries denom =
      TruncatedSeries::constant(1.0, order) - Complex(params.alpha) * shifted_up(ws);
  const TruncatedSeries integrand = Complex(-2.0 * params.alpha * (1.0 - params.beta)) *
                                    (ws * reciprocal(truncated(denom, order)));
  return exp(truncated(integrate(integrand), order));
}

TruncatedSeries synthesize_member(const SchwarzSpec& w, const FamilyParams& params, int order) {
  if (order < 1) throw BadParameter("member synthesis needs order >= 1");
  const TruncatedSeries g = synthesize_member_reciprocal(w, params, order - 1);
  return shifted_up(reciprocal(g));
}

TruncatedSeries alpha_class_transform(const TruncatedSeries& f, double beta, int order) {
  if (!(beta >= 0.0) || !(beta < 1.0)) throw BadParameter("beta must lie in [0, 1)");
  if (!f.is_normalized()) throw NotNormalized("transform needs a normalized map");
  if (order < 1) throw BadParameter("order must be >= 1");
  return truncated(shifted_up(pow(shifted_down(f), 1.0 / (1.0 - beta))), order);
}

TruncatedSeries alpha_class_transform_inverse(const TruncatedSeries& big_f, double beta,
                                              int order) {
  if (!(beta >= 0.0) || !(beta < 1.0)) throw BadParameter("beta must lie in [0, 1)");
  if (!big_f.is_normalized()) throw NotNormalized("transform needs a normalized map");
  if (order < 1) throw BadParameter("order must be >= 1");
  return truncated(shifted_up(pow(shifted_down(big_f), 1.0 - beta)), order);
}

}  // namespace starea
