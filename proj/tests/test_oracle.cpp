#include <gtest/gtest.h>

#include <cmath>

#include "ladder/entanglement.hpp"
#include "ladder/oracle.hpp"

using namespace ladder;

TEST(Oracle, PartialTraceIsNormalizedAndPsd) {
  const Eigen::VectorXd psi = oracle::ground_state(0.6, 6, 0);
  for (const std::vector<int>& keep :
       {std::vector<int>{0}, std::vector<int>{2, 4},
        std::vector<int>{0, 1, 2}}) {
    const Eigen::MatrixXd rho = oracle::partial_trace(psi, keep, 6);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
  }
}

TEST(Oracle, ComplementaryCutsShareEntropy) {
  const Eigen::VectorXd psi = oracle::ground_state(0.6, 6, 0);
  const double sa = von_neumann(oracle::partial_trace(psi, {0, 1}, 6));
  const double sb = von_neumann(oracle::partial_trace(psi, {2, 3, 4, 5}, 6));
  EXPECT_NEAR(sa, sb, 1e-10);
}

TEST(Oracle, PartialTraceInputValidation) {
  const Eigen::VectorXd psi = oracle::ground_state(0.6, 4, 0);
  EXPECT_THROW(oracle::partial_trace(psi, {}, 4), std::invalid_argument);
  EXPECT_THROW(oracle::partial_trace(psi, {2, 1}, 4), std::invalid_argument);
  EXPECT_THROW(oracle::partial_trace(psi, {0, 4}, 4), std::invalid_argument);
}

TEST(Oracle, SingleRungEntropyApproachesTdl) {
  const double s8 = von_neumann(
      oracle::partial_trace(oracle::ground_state(0.0, 8, 0), {1}, 8));
  EXPECT_NEAR(s8, std::log2(3.0), 2e-4);
  const double s4 = std::abs(von_neumann(oracle::partial_trace(
                        oracle::ground_state(0.5, 4, 0), {1}, 4)) -
                    s_single(0.5));
  const double d8 = std::abs(von_neumann(oracle::partial_trace(
                        oracle::ground_state(0.5, 8, 0), {1}, 8)) -
                    s_single(0.5));
  EXPECT_LT(d8, s4);  // finite-size error shrinks with system size
}

TEST(Oracle, MaximallyMixedPairAtUnitCoupling) {
  const Eigen::VectorXd psi = oracle::ground_state(1.0, 8, 0);
  const double s = von_neumann(oracle::partial_trace(psi, {1, 3}, 8));
  EXPECT_NEAR(s, 4.0, 1e-12);
}

TEST(Oracle, AverageFidelityContracts) {
  const auto same = oracle::average_fidelity(1.0, 0.0, 4, 100);
  EXPECT_NEAR(same.value, 1.0, 1e-12);
  EXPECT_NEAR(same.stderr_, 0.0, 1e-12);
  EXPECT_THROW(oracle::average_fidelity(1.0, 0.1, 4, 0),
               std::invalid_argument);
}

TEST(Oracle, AverageFidelityErrorShrinksWithSamples) {
  const auto a = oracle::average_fidelity(1.0, 0.1, 4, 200, 42);
  const auto b = oracle::average_fidelity(1.0, 0.1, 4, 20000, 42);
  EXPECT_GT(a.stderr_, b.stderr_);
  // ~1/sqrt(K): a factor-100 sample increase shrinks stderr ~10x
  EXPECT_NEAR(a.stderr_ / b.stderr_, 10.0, 4.0);
}

TEST(Oracle, DimerCorrelationsLongRangedInDimerPhase) {
  const double c1 = oracle::dimer_correlation(1.0, 8, 2);
  const double c10 = oracle::dimer_correlation(10.0, 8, 2);
  EXPECT_GT(std::abs(c1), 0.1);          // long-range dimer order at u=1
  EXPECT_LT(std::abs(c10), std::abs(c1));  // fades toward the rung-singlet limit
}

TEST(Oracle, DimerCorrelationRange) {
  EXPECT_THROW(oracle::dimer_correlation(1.0, 8, 0), std::invalid_argument);
  EXPECT_THROW(oracle::dimer_correlation(1.0, 8, 7), std::invalid_argument);
}

TEST(Oracle, EnergyResidualZeroForGroundStateOnly) {
  EXPECT_LT(oracle::energy_residual(1.0, 4), 1e-10);
  EXPECT_LT(oracle::energy_residual(0.5, 6), 1e-10);
}

TEST(Oracle, HaarPairIsNormalized) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = oracle::detail::haar_pair(rng);
    EXPECT_NEAR(std::norm(a) + std::norm(b), 1.0, 1e-12);
  }
}

TEST(Oracle, HaarFirstMomentMatchesUniformMeasure) {
  // E[|a|^2] = 1/2 on the 3-sphere
  std::mt19937_64 rng(17);
  double sum = 0.0;
  const int k = 20000;
  for (int i = 0; i < k; ++i) sum += std::norm(oracle::detail::haar_pair(rng).first);
  EXPECT_NEAR(sum / k, 0.5, 0.01);
}
