#include <gtest/gtest.h>

#include <cmath>

#include "growthlab/error.hpp"
#include "growthlab/profile.hpp"

using namespace growthlab;
using namespace growthlab::radial;

TEST(Profile, InterpolatesLinearInLogBetweenGridPoints) {
  const RadialProfile p({1.0, 10.0}, {0.0, 2.0}, 0.0);
  EXPECT_DOUBLE_EQ(p(1.0), 0.0);
  EXPECT_DOUBLE_EQ(p(10.0), 2.0);
  EXPECT_NEAR(p(std::sqrt(10.0)), 1.0, 1e-15);
  // an exact log-linear function is reproduced
  const RadialProfile q({0.5, 2.0, 7.0}, {std::log(0.5), std::log(2.0), std::log(7.0)}, -1.0);
  for (double t : {0.6, 1.3, 4.4}) EXPECT_NEAR(q(t), std::log(t), 1e-14);
}

TEST(Profile, LinearInTBelowFirstGridPoint) {
  const RadialProfile p({2.0, 4.0}, {3.0, 5.0}, 1.0);
  EXPECT_DOUBLE_EQ(p(0.0), 1.0);
  EXPECT_DOUBLE_EQ(p(1.0), 2.0);
  EXPECT_DOUBLE_EQ(p(-1.0), 1.0);
}

TEST(Profile, Tails) {
  const std::vector<double> g = {1.0, 2.0};
  const std::vector<double> v = {1.0, 3.0};
  EXPECT_THROW(RadialProfile(g, v, 0.0)(2.5), Error);
  EXPECT_DOUBLE_EQ(RadialProfile(g, v, 0.0, Tail::constant())(50.0), 3.0);
  EXPECT_DOUBLE_EQ(RadialProfile(g, v, 0.0, Tail::power(2.0, 0.5))(4.0), 3.0 + 0.5 * (16 - 4));
  EXPECT_NEAR(RadialProfile(g, v, 0.0, Tail::log_linear(2.0))(2 * std::exp(1.0)), 5.0, 1e-14);
  const auto c = RadialProfile::constant(-2.0);
  for (double t : {0.0, 0.5, 1.0, 1e9}) EXPECT_EQ(c(t), -2.0);
  EXPECT_EQ(RadialProfile(g, v, 0.0).with_tail(Tail::constant())(9.0), 3.0);
}

TEST(Profile, IncreasingFlagFlattensRoundoffOnly) {
  const RadialProfile p({1.0, 2.0, 3.0}, {1.0, 1.0 - 1e-12, 2.0}, 0.0, {}, true);
  EXPECT_EQ(p.values()[1], 1.0);
  EXPECT_THROW(RadialProfile({1.0, 2.0}, {1.0, 0.5}, 0.0, {}, true), Error);
  EXPECT_THROW(RadialProfile({1.0}, {-1.0}, 0.0, {}, true), Error);
  EXPECT_THROW(RadialProfile({1.0}, {1.0}, 0.0, Tail::log_linear(-1.0), true), Error);
}

TEST(Profile, RejectsMalformedInput) {
  EXPECT_THROW(RadialProfile({}, {}, 0.0), Error);
  EXPECT_THROW(RadialProfile({1.0, 1.0}, {0.0, 0.0}, 0.0), Error);
  EXPECT_THROW(RadialProfile({-1.0}, {0.0}, 0.0), Error);
  EXPECT_THROW(RadialProfile({1.0}, {NAN}, 0.0), Error);
  EXPECT_THROW(RadialProfile({1.0}, {0.0, 1.0}, 0.0), Error);
  EXPECT_THROW(RadialProfile({1.0}, {0.0}, 0.0, Tail::power(0.0, 1.0)), Error);
}

TEST(Profile, LogGrid) {
  const auto g = log_grid(0.1, 10.0, 16);
  ASSERT_EQ(g.size(), 33u);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g.back(), 10.0);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(std::log10(g[i] / g[i - 1]), 1.0 / 16, 1e-12);
  EXPECT_EQ(log_grid(2.0, 2.0, 5).size(), 1u);
  EXPECT_THROW(log_grid(0.0, 1.0, 4), Error);
  EXPECT_THROW(log_grid(2.0, 1.0, 4), Error);
}
