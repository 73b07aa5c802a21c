#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "growthlab/error.hpp"
#include "growthlab/funcat.hpp"
#include "growthlab/products.hpp"
#include "growthlab/radial.hpp"

using namespace growthlab;
using namespace growthlab::products;
using points::PointDistribution;
using points::PointMass;

namespace {

constexpr double kPi = std::numbers::pi;

// ln|prod (1 - z/a) exp(sum_j (z/a)^j / j)| summed factor by factor.
double naive_log_abs(const PointDistribution& z, int q, cplx w) {
  double s = 0.0;
  for (const auto& e : z.entries()) {
    const cplx u = w / e.point;
    cplx corr = 0.0, pw = 1.0;
    for (int j = 1; j <= q; ++j) {
      pw *= u;
      corr += pw / double(j);
    }
    s += e.multiplicity * (std::log(std::abs(1.0 - u)) + corr.real());
  }
  return s;
}

}  // namespace

TEST(Products, PrimaryFactor) {
  EXPECT_NEAR(std::abs(primary_factor(0, 0.3) - cplx(0.7)), 0.0, 1e-16);
  for (int q = 0; q < 5; ++q) EXPECT_EQ(primary_factor(q, 0.0), cplx(1.0));
  EXPECT_NEAR(primary_factor(1, 0.5).real(), 0.5 * std::exp(0.5), 1e-15);
  for (int q = 0; q < 4; ++q)
    for (const cplx w : {cplx(1e-9, 2e-9), cplx(0.3, -0.2), cplx(1.7, 0.9)})
      EXPECT_LT(std::abs(std::exp(log_primary_factor(q, w)) - primary_factor(q, w)), 1e-14 * std::abs(primary_factor(q, w)) + 1e-300);
  // small-w branch keeps relative accuracy: ln E_2(w) ~ -w^3/3
  const cplx w(1e-6, 0);
  EXPECT_NEAR(log_primary_factor(2, w).real() / (-1e-18 / 3), 1.0, 1e-5);
}

TEST(Products, GenusForOrder) {
  EXPECT_EQ(genus_for_order(1.0), 0);
  EXPECT_EQ(genus_for_order(1.5), 1);
  EXPECT_EQ(genus_for_order(3.0), 2);
  EXPECT_EQ(genus_for_order(0.4), 0);
}

TEST(Products, BuildExamples) {
  const auto empty = build_f_Z(PointDistribution{}, 1.0);
  EXPECT_EQ(log_abs_product(empty, cplx(3, 4)), 0.0);
  const auto one = build_f_Z(PointDistribution::from_points({{1.0, 1}}), 1.0);
  EXPECT_EQ(one.genus, 0);
  EXPECT_NEAR(log_abs_product(one, 3.0), std::log(2.0), 1e-15);
  EXPECT_EQ(log_abs_product(one, 0.0), one.log_leading);
  EXPECT_EQ(log_abs_product(one, 1.0), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(build_f_Z(PointDistribution::from_points({}, 1), 1.0), Error);
}

TEST(Products, MatchesFactorwiseOracle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-6, 6);
  std::vector<PointMass> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({{u(rng), u(rng)}, 1 + i % 2});
  const auto z = PointDistribution::from_points(pts);
  for (double p : {1.0, 2.0, 2.5}) {
    const auto spec = build_f_Z(z, p);
    for (int i = 0; i < 50; ++i) {
      const cplx w(u(rng), u(rng));
      EXPECT_NEAR(log_abs_product(spec, w), naive_log_abs(z, spec.genus, w), 1e-10);
      EXPECT_NEAR(log_product(spec, w).real(), log_abs_product(spec, w), 1e-10);
    }
  }
}

TEST(Products, PlusMinusIntegersGiveSinc) {
  ZeroGenerator gen{[](std::size_t k) { return std::vector<cplx>{double(k), -double(k)}; }, 1.0};
  const auto spec = build_f_Z(gen, 2.0, 1e4 + 0.5);
  EXPECT_EQ(spec.genus, 1);
  EXPECT_EQ(spec.zeros.total_multiplicity(), 20000);
  EXPECT_NEAR(log_abs_product(spec, 0.5), std::log(2 / kPi), 1e-4);
  for (const cplx z : {cplx(0.3, 0.2), cplx(-0.7, 0.1), cplx(2.5, 1.0)}) {
    const cplx sinc = std::sin(kPi * z) / (kPi * z);
    EXPECT_NEAR(log_abs_product(spec, z), std::log(std::abs(sinc)), 1e-3 * std::abs(z) * std::abs(z));
  }
  // tail bound is finite inside the cutoff and covers the observed error
  const cplx z(0.5, 0.0);
  EXPECT_GE(spec.tail_bound(z), std::abs(log_abs_product(spec, z) - std::log(2 / kPi)) - 1e-12);
  EXPECT_TRUE(std::isinf(spec.tail_bound(2e4)));
  ZeroGenerator bad{[](std::size_t k) { return std::vector<cplx>{double(k)}; }, 1.0};
  EXPECT_THROW(build_f_Z(bad, 1.0, 100.5), Error);
}

TEST(Products, PairSymmetricGenusOneEqualsGenusZeroOfSquares) {
  std::vector<PointMass> pts;
  for (int k = 1; k <= 25; ++k) {
    const cplx a = std::polar(0.5 + 0.3 * k, 0.7 * k);
    pts.push_back({a, 1});
    pts.push_back({-a, 1});
  }
  const auto spec = build_f_Z(PointDistribution::from_points(pts), 2.0);
  for (const cplx z : {cplx(0.2, 0.1), cplx(1.3, -2.0), cplx(-3.1, 0.4)}) {
    double direct = 0.0;
    for (int k = 1; k <= 25; ++k) {
      const cplx a = std::polar(0.5 + 0.3 * k, 0.7 * k);
      direct += std::log(std::abs(1.0 - z * z / (a * a)));
    }
    EXPECT_NEAR(log_abs_product(spec, z), direct, 1e-10);
  }
}

TEST(Products, ZeroFaithfulness) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-4, 4);
  std::vector<PointMass> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({{u(rng), u(rng)}, 1 + i % 3});
  const auto z = PointDistribution::from_points(pts);
  for (double p : {1.0, 3.0}) {
    const auto spec = build_f_Z(z, p);
    for (const auto& e : z.entries()) EXPECT_EQ(log_abs_product(spec, e.point), -std::numeric_limits<double>::infinity());
    for (int i = 0; i < 1000; ++i) {
      const cplx w(u(rng), u(rng));
      if (z.multiplicity_at(w) == 0) {
        EXPECT_TRUE(std::isfinite(log_abs_product(spec, w)));
      }
    }
  }
}

TEST(Products, JensenAndGrowthLowerBound) {
  std::vector<PointMass> pts;
  for (int k = 1; k <= 60; ++k) pts.push_back({std::polar(std::sqrt(double(k)), 2.1 * k), 1});
  const auto z = PointDistribution::from_points(pts);
  const auto spec = build_f_Z(z, 3.0);
  const auto f = funcat::FunctionSpec::canonical_product(spec);
  for (double r : {0.7, 2.0, 4.5, 7.0}) {
    EXPECT_LE(std::abs(radial::jensen_residual(f, r)), 1e-6) << r;
    EXPECT_GE(radial::max_modulus(f, r), points::integral_count(z, r) + spec.log_leading - 1e-6);
  }
}

TEST(Products, SquaresHaveOrderOneHalf) {
  std::vector<PointMass> pts;
  for (int k = 1; k <= 200; ++k) pts.push_back({double(k) * k, 1});
  const auto spec = build_f_Z(PointDistribution::from_points(pts), 1.0);
  const auto f = funcat::FunctionSpec::canonical_product(spec);
  // positive zeros on the real axis: the maximum is at -r
  for (double r : {3.0, 50.0}) EXPECT_NEAR(radial::max_modulus(f, r), log_abs_product(spec, -r), 1e-9);
  const auto m = radial::RadialProfile::sample([&](double r) { return radial::max_modulus(f, r); },
                                               radial::log_grid(1.0, 1e4, 16), 0.0);
  EXPECT_NEAR(radial::estimate_order_type(m).order, 0.5, 0.1);
}
