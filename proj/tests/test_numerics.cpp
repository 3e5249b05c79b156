#include <gtest/gtest.h>

#include <cmath>

#include "ladder/numerics.hpp"

using ladder::num::pow_sum;

TEST(PowSum, MatchesDirectEvaluationAtSmallExponents) {
  for (long long e : {2LL, 4LL, 10LL}) {
    const auto r = pow_sum({{1.0, 4.0}, {3.0, -2.0}}, e);
    const double direct = std::pow(4.0, e) + 3.0 * std::pow(-2.0, e);
    EXPECT_NEAR(std::exp(r.log_abs) * r.sign, direct, 1e-9 * direct);
  }
}

TEST(PowSum, SurvivesHugeExponents) {
  // (u^2+3)^{2N} + 3 (u^2-1)^{2N} at u = 2, N = 1e7: ~ 7^{2e7}
  const auto r = pow_sum({{1.0, 7.0}, {3.0, 3.0}}, 20000000);
  EXPECT_EQ(r.sign, 1);
  EXPECT_NEAR(r.log_abs, 2e7 * std::log(7.0), 1e-6);
}

TEST(PowSum, DominantNegativeBase) {
  // 2 (-5)^4 + 1^4 = 1251
  const auto r = pow_sum({{2.0, -5.0}, {1.0, 1.0}}, 4);
  EXPECT_EQ(r.sign, 1);
  EXPECT_NEAR(std::exp(r.log_abs), 1251.0, 1e-9);
}

TEST(PowSum, LogRatioCancelsScale) {
  const auto a = pow_sum({{1.0, 7.0}, {3.0, 3.0}}, 2000);
  const auto b = pow_sum({{1.0, 7.0}}, 2000);
  // ratio -> 1 + 3 (3/7)^2000 ~ 1
  EXPECT_NEAR(ladder::num::log_ratio(a, b), 0.0, 1e-12);
}

TEST(PowSum, RejectsOddExponent) {
  EXPECT_THROW(pow_sum({{1.0, 2.0}}, 3), std::invalid_argument);
}
