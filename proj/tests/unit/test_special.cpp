#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "growthlab/error.hpp"
#include "growthlab/special.hpp"

using namespace growthlab;
using namespace growthlab::special;

namespace {

constexpr double kPi = std::numbers::pi;

// ln Gamma by upward recurrence to |z| >= 30 and the Stirling series there.
cplx stirling_log_gamma(cplx z) {
  cplx shift = 0.0;
  while (std::abs(z) < 30.0 || z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx zi = 1.0 / z, zi2 = zi * zi;
  const cplx series = zi * (1.0 / 12 - zi2 * (1.0 / 360 - zi2 * (1.0 / 1260 - zi2 / 1680.0)));
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * kPi) + series - shift;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Special, GammaOnRealAxisMatchesBoost) {
  for (double x = -7.5; x < 25; x += 0.37) {
    if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
    EXPECT_LT(rel(special::gamma(cplx(x)), boost::math::tgamma(x)), 1e-12) << x;
  }
  EXPECT_NEAR(std::abs(reciprocal_gamma(0.5) - 1 / std::sqrt(kPi)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(reciprocal_gamma(1.0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(reciprocal_gamma(-2.0), cplx(0.0));
  EXPECT_EQ(reciprocal_gamma(0.0), cplx(0.0));
}

TEST(Special, ComplexGammaMatchesStirlingOracle) {
  for (double re = -6.3; re < 12; re += 1.1)
    for (double im = -9; im < 9; im += 1.7) {
      const cplx z(re, im);
      const cplx a = std::exp(log_gamma(z)), b = std::exp(stirling_log_gamma(z));
      EXPECT_LT(rel(a, b), 1e-12) << z;
    }
}

TEST(Special, GammaRecurrenceAndReflection) {
  for (double re = -4.2; re < 6; re += 0.9)
    for (double im = -3; im < 3; im += 0.8) {
      const cplx z(re, im);
      EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12);
      EXPECT_LT(rel(gamma(z) * gamma(1.0 - z), kPi / sin_pi(z)), 1e-12);
    }
}

TEST(Special, SinPiIsExactNearIntegers) {
  EXPECT_EQ(sin_pi(3.0), cplx(0.0));
  EXPECT_NEAR(std::abs(sin_pi(1e6 + 0.5)), 1.0, 1e-15);
  const double x = 5 + 1e-10, d = x - 5;  // d is exact
  EXPECT_NEAR(sin_pi(x).real() / (-kPi * d), 1.0, 1e-9);
  const cplx z(0.3, 4.0);
  EXPECT_LT(rel(std::exp(log_sin_pi(z)), std::sin(kPi * z)), 1e-13);
  EXPECT_TRUE(std::isfinite(log_sin_pi(cplx(0.3, 400.0)).real()));
}

TEST(Special, MittagLefflerClassicalCases) {
  EXPECT_EQ(mittag_leffler(0.7, 1.0, 0.0), cplx(1.0));
  EXPECT_NEAR(mittag_leffler(0.5, 1.0, 1.0).real(), std::cosh(1.0), 1e-12);
  EXPECT_NEAR(mittag_leffler(1.0, 1.0, -3.0).real(), std::exp(-3.0), 1e-12);
  for (double x : {-2.0, 0.5, 3.0, 9.0}) {
    // order 2: sum x^k / Gamma(1 + k/2) = exp(x^2) erfc(-x)
    EXPECT_LT(rel(mittag_leffler(2.0, 1.0, x), std::exp(x * x) * std::erfc(-x)), 1e-12) << x;
    // mu = 2: (e^x - 1) / x
    EXPECT_LT(rel(mittag_leffler(1.0, 2.0, x), std::expm1(x) / x), 1e-12) << x;
    if (x > 0) {
      EXPECT_LT(rel(mittag_leffler(0.5, 1.0, x), std::cosh(std::sqrt(x))), 1e-13);
    }
  }
  const cplx z(2, 1);
  EXPECT_LT(rel(mittag_leffler(1.0, 1.0, z), std::exp(z)), 1e-10);
}

TEST(Special, MittagLefflerOrderOneIsExpOnDisk) {
  for (double r = 0.5; r <= 20; r += 2.5)
    for (int k = 0; k < 16; ++k) {
      const cplx z = std::polar(r, 2 * kPi * k / 16 + 0.1);
      const cplx e = std::exp(z);
      EXPECT_LE(std::abs(mittag_leffler(1.0, 1.0, z) - e), 1e-8 * std::max(1.0, std::abs(e))) << z;
    }
}

TEST(Special, MittagLefflerRejectsAsymptoticRegime) {
  EXPECT_THROW(mittag_leffler_series(1.0, 1.0, 701.0), Error);
  EXPECT_THROW(mittag_leffler_series(0.0, 1.0, 1.0), Error);
  const auto v = mittag_leffler_series(1.0, 1.0, -30.0);
  EXPECT_GT(v.est_rel_err, 1e-5);  // cancellation is reported
}
