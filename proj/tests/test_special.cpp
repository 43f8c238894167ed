#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "starea/special.hpp"

using starea::FamilyParams;
using starea::gauss_2f1;
using starea::max_area;
using starea::max_area_beta0;
using starea::pochhammer;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.5, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-2.0, 2) == 2.0);  // (-2)(-1)
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  CHECK_THROWS_AS(pochhammer(1.0, -1), starea::BadParameter);
}

TEST_CASE("hypergeometric basics") {
  CHECK(gauss_2f1({0.25, 0.75, 1.5, 0.0}).value == 1.0);
  CHECK(gauss_2f1({0.0, 0.0, 2.0, 0.6}).value == 1.0);
  CHECK(gauss_2f1({0.0, 0.0, 2.0, 0.6}).error_estimate == 0.0);

  // (-1,-1;2;x) terminates after the linear term: 1 + x/2
  for (double x : {0.1, 0.5, 1.0}) {
    const auto r = gauss_2f1({-1.0, -1.0, 2.0, x});
    CHECK(r.value == doctest::Approx(1.0 + x / 2.0).epsilon(1e-16));
    CHECK(r.error_estimate == 0.0);
  }

  // value frozen from an independent high-precision evaluation
  const auto f = gauss_2f1({1.0 / 3.0, 1.0 / 3.0, 2.0, 25.0 / 36.0});
  CHECK(f.value == doctest::Approx(1.050812814021545).epsilon(1e-13));

  // in-test partial-sum oracle with explicit Pochhammer products
  double direct = 0.0;
  for (int n = 0; n < 60; ++n) {
    direct += pochhammer(1.0 / 3.0, n) * pochhammer(1.0 / 3.0, n) /
              (pochhammer(2.0, n) * pochhammer(1.0, n)) * std::pow(25.0 / 36.0, n);
  }
  CHECK(f.value == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("hypergeometric domain errors") {
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 2.0, 1.2}), starea::BadParameter);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 2.0, -0.1}), starea::BadParameter);

  // divergent at x = 1: c - a - b = -1 and no termination
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 1.0, 1.0}), starea::DivergentSeries);

  // c hits a non-positive integer before any termination
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, -2.0, 0.3}), starea::BadParameter);
  CHECK_THROWS_AS(gauss_2f1({-3.0, 0.5, -2.0, 0.3}), starea::BadParameter);
  // ... but termination first is fine: (-2)_k kills the series at k = 2
  CHECK_NOTHROW(gauss_2f1({-2.0, 0.5, -3.0, 0.3}));

  // term cap: convergence at x = 1 too slow for the default tolerance
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 2.0, 1.0}), starea::DivergentSeries);
  // same series converges fine with a looser tolerance
  CHECK_NOTHROW(gauss_2f1({0.5, 0.5, 2.0, 1.0}, 1e-8));
}

TEST_CASE("hypergeometric error estimate and monotonicity") {
  // positive-term series: estimate must cover the dropped tail
  const auto coarse = gauss_2f1({1.0 / 3.0, 1.0 / 3.0, 2.0, 0.7}, 1e-6);
  const auto fine = gauss_2f1({1.0 / 3.0, 1.0 / 3.0, 2.0, 0.7}, 1e-15);
  CHECK(coarse.error_estimate > 0.0);
  CHECK(std::abs(fine.value - coarse.value) <= coarse.error_estimate);

  // terminating series: exact, zero estimate, independent finite-sum oracle
  const auto finite = gauss_2f1({-3.0, 0.5, 2.0, 0.9});
  double oracle = 0.0;
  for (int n = 0; n <= 3; ++n)
    oracle += pochhammer(-3.0, n) * pochhammer(0.5, n) /
              (pochhammer(2.0, n) * pochhammer(1.0, n)) * std::pow(0.9, n);
  CHECK(finite.value == doctest::Approx(oracle).epsilon(1e-15));
  CHECK(finite.error_estimate == 0.0);

  // partial sums grow monotonically for non-negative parameters
  double previous = 0.0;
  for (double tol : {1e-2, 1e-5, 1e-9, 1e-13}) {
    const double v = gauss_2f1({0.4, 0.7, 1.3, 0.5}, tol).value;
    CHECK(v >= previous);
    previous = v;
  }
  CHECK(previous <= gauss_2f1({0.4, 0.7, 1.3, 0.5}, 1e-15).value + 1e-15);
}

TEST_CASE("maximal area closed forms") {
  // boundary-radius values: loose check against the 6-digit printed numbers,
  // tight check against independently computed high-precision values
  const double v1 = max_area(FamilyParams(0.25, 2.0 / 3.0), 1.0);
  CHECK(std::abs(v1 - 0.0875754) < 1e-5);
  CHECK(v1 == doctest::Approx(0.0875752472863).epsilon(1e-10));

  const double v2 = max_area(FamilyParams(5.0 / 6.0, 0.8), 1.0);
  CHECK(std::abs(v2 - 0.415385) < 1e-5);
  CHECK(v2 == doctest::Approx(0.415384137906).epsilon(1e-10));

  CHECK(max_area(FamilyParams(2.0 / 3.0, 2.0 / 3.0), 1.0) ==
        doctest::Approx(0.638449538026).epsilon(1e-10));
  CHECK(max_area(FamilyParams(5.0 / 6.0, 2.0 / 3.0), 1.0) ==
        doctest::Approx(1.01889685705).epsilon(1e-10));
  CHECK(max_area(FamilyParams(0.25, 0.8), 1.0) ==
        doctest::Approx(0.0317791263788).epsilon(1e-10));
  CHECK(max_area(FamilyParams(2.0 / 3.0, 0.8), 1.0) ==
        doctest::Approx(0.245872099234).epsilon(1e-10));

  // (alpha, beta) = (1, 1/2): the hypergeometric factor collapses to 1
  for (double rho : {0.05, 0.37, 0.71, 1.0}) {
    CHECK(max_area(FamilyParams(1.0, 0.5), rho) == doctest::Approx(kPi * rho * rho).epsilon(1e-15));
  }

  CHECK_THROWS_AS(max_area(FamilyParams(0.5, 0.0), 0.0), starea::RadiusOutOfRange);
  CHECK_THROWS_AS(max_area(FamilyParams(0.5, 0.0), 1.5), starea::RadiusOutOfRange);
}

TEST_CASE("order-zero polynomial form") {
  const double t1 = max_area_beta0(0.25, 1.0);
  CHECK(std::abs(t1 - 0.809942) < 1e-5);
  CHECK(t1 == doctest::Approx(0.809941856004).epsilon(1e-10));

  // printed table value has 1e-4 granularity at this magnitude
  const double t4 = max_area_beta0(8.0 / 9.0, 1.0);
  CHECK(std::abs(t4 - 13.8515) < 1e-4);
  CHECK(t4 == doctest::Approx(13.8515458441).epsilon(1e-10));

  CHECK(max_area_beta0(2.0 / 3.0, 1.0) == doctest::Approx(6.82617663002).epsilon(1e-10));
  CHECK(max_area_beta0(5.0 / 6.0, 1.0) == doctest::Approx(11.7567317669).epsilon(1e-10));

  // beta = 0 specialization of the general formula
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0})
    for (double rho : {0.2, 0.5, 0.8, 1.0})
      CHECK(std::abs(max_area_beta0(alpha, rho) - max_area(FamilyParams(alpha, 0.0), rho)) <
            1e-12);

  CHECK_THROWS_AS(max_area_beta0(0.0, 0.5), starea::BadParameter);
  CHECK_THROWS_AS(max_area_beta0(0.5, 0.0), starea::RadiusOutOfRange);
}

TEST_CASE("area function is monotone and convex in rho") {
  std::vector<std::pair<double, double>> grid;
  for (double alpha : {0.3, 0.6, 0.9, 0.95, 1.0})
    for (double beta : {0.0, 0.25, 0.5, 0.75, 0.9}) grid.emplace_back(alpha, beta);

  for (const auto& [alpha, beta] : grid) {
    const FamilyParams params(alpha, beta);
    // keep the slow alpha = rho = 1 corner off the default-tolerance path
    const double rho_top = alpha == 1.0 ? 0.999 : 1.0;
    const double tol = alpha == 1.0 ? 1e-12 : 1e-14;
    const int n = 100;
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
      const double rho = rho_top * (i + 1) / n;
      values[i] = max_area(params, rho, tol);
    }
    for (int i = 1; i < n; ++i) CHECK(values[i] >= values[i - 1] - 1e-12);
    for (int i = 2; i < n; ++i)
      CHECK(values[i] - 2.0 * values[i - 1] + values[i - 2] >= -1e-10);
  }
}

TEST_CASE("area bounded by its boundary value") {
  for (double alpha : {0.2, 0.5, 0.8, 0.95}) {
    for (double beta : {0.0, 1.0 / 3.0, 0.5, 0.75}) {
      const FamilyParams params(alpha, beta);
      const double at_one = max_area(params, 1.0);
      for (double rho : {0.1, 0.4, 0.7, 0.9, 0.99}) CHECK(max_area(params, rho) <= at_one + 1e-12);
    }
  }
  // alpha = 1 corners: terminating cases at the default tolerance, one slow
  // case with a looser one
  for (double beta : {0.0, 0.5}) {
    const double at_one = max_area(FamilyParams(1.0, beta), 1.0);
    for (double rho : {0.3, 0.8, 0.99}) CHECK(max_area(FamilyParams(1.0, beta), rho) <= at_one);
  }
  const double slow = max_area(FamilyParams(1.0, 2.0 / 3.0), 1.0, 1e-10);
  for (double rho : {0.3, 0.8, 0.99})
    CHECK(max_area(FamilyParams(1.0, 2.0 / 3.0), rho) <= slow + 1e-8);
}
