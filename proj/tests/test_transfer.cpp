#include <gtest/gtest.h>

#include <cmath>

#include "ladder/entanglement.hpp"
#include "ladder/oracle.hpp"
#include "ladder/transfer.hpp"

using namespace ladder;

TEST(Transfer, SpectrumAtUZero) {
  // eigenvalues {u^2+3, u^2-1 (x3)} -> {3, -1, -1, -1} at u=0
  Eigen::EigenSolver<Mat4> es(transfer_matrix(0.0));
  std::vector<double> ev;
  for (int i = 0; i < 4; ++i) ev.push_back(es.eigenvalues()[i].real());
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(ev[0], -1.0, 1e-12);
  EXPECT_NEAR(ev[1], -1.0, 1e-12);
  EXPECT_NEAR(ev[2], -1.0, 1e-12);
  EXPECT_NEAR(ev[3], 3.0, 1e-12);
}

TEST(Transfer, CellEigenvalueIsProductOfRungFactors) {
  for (double u : {0.0, 0.5, 2.0}) {
    const CellEnv env = cell_environment(u);
    EXPECT_NEAR(env.lambda, std::pow(u * u + 3.0, 2), 1e-9) << "u=" << u;
  }
}

TEST(Transfer, SingleRungDensityMatrixLandmarks) {
  const DensityMatrix r0 = rho_single_tdl(0.0);
  Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
  expect(0, 0) = expect(1, 1) = expect(2, 2) = 1.0 / 3.0;
  EXPECT_LT((r0.matrix - expect).cwiseAbs().maxCoeff(), 1e-12);
  const DensityMatrix r1 = rho_single_tdl(1.0);
  EXPECT_LT((r1.matrix - Eigen::Matrix4d::Identity() / 4.0)
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(Transfer, SingleRungDiagonalClosedForm) {
  // diag = {1, 1, 1, u^2} / (u^2 + 3)
  for (double u : {0.5, 2.0}) {
    const double s = u * u + 3.0;
    const DensityMatrix r = rho_single_tdl(u);
    EXPECT_NEAR(r.matrix(0, 0), 1.0 / s, 1e-12);
    EXPECT_NEAR(r.matrix(3, 3), u * u / s, 1e-12);
    EXPECT_LT(std::abs(r.matrix(0, 3)), 1e-12);
  }
}

TEST(Transfer, PairMatchesOracleAtFiniteSize) {
  // finite-size corrections at 2N=8 are O(((u^2-1)/(u^2+3))^8)
  for (double u : {0.0, 0.5}) {
    const Eigen::VectorXd psi = oracle::ground_state(u, 8, 0);
    for (long long n : {2LL, 3LL}) {
      const Eigen::MatrixXd rho_o =
          oracle::partial_trace(psi, {0, static_cast<int>(n)}, 8);
      const DensityMatrix rho_t = rho_pair_tdl(u, n, 0);
      EXPECT_LT((rho_o - rho_t.matrix).cwiseAbs().maxCoeff(), 2.5e-3)
          << "u=" << u << " n=" << n;
    }
  }
}

TEST(Transfer, PairParityMatchesShiftedKeepSet) {
  const Eigen::VectorXd psi = oracle::ground_state(0.5, 8, 0);
  const Eigen::MatrixXd rho_o = oracle::partial_trace(psi, {1, 3}, 8);
  EXPECT_LT((rho_o - rho_pair_tdl(0.5, 2, 1).matrix).cwiseAbs().maxCoeff(),
            1e-3);
}

TEST(Transfer, PartialTraceOfPairGivesSingle) {
  const DensityMatrix rp = rho_pair_tdl(0.7, 3, 0);
  Eigen::Matrix4d left = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) left(a, b) += rp.matrix(4 * a + c, 4 * b + c);
  EXPECT_LT((left - rho_single_tdl(0.7).matrix).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Transfer, SpinCorrelatorClosedEqualsTransferString) {
  for (double u : {0.0, 0.5, 2.0})
    for (long long n = 1; n <= 20; ++n)
      EXPECT_NEAR(spin_correlation_closed(u, n), spin_correlation_tm(u, n),
                  1e-10)
          << "u=" << u << " n=" << n;
}

TEST(Transfer, SpinCorrelatorMatchesOracle) {
  for (double u : {0.0, 0.5})
    for (long long n : {1LL, 2LL, 3LL})
      EXPECT_NEAR(oracle::spin_correlation(u, 8, n),
                  spin_correlation_closed(u, n), 2e-3)
          << "u=" << u << " n=" << n;
}

TEST(Transfer, CorrelationsVanishAtUnitCoupling) {
  for (long long n = 1; n <= 10; ++n)
    EXPECT_NEAR(spin_correlation_closed(1.0, n), 0.0, 1e-14);
}

TEST(Transfer, SignAlternation) {
  for (long long n = 1; n <= 10; ++n) {
    const double v = spin_correlation_closed(0.5, n);
    if (n % 2 == 0)
      EXPECT_GT(v, 0.0);
    else
      EXPECT_LT(v, 0.0);
  }
}

TEST(Transfer, AkltNearestNeighbourValue) {
  // u=0, n=1: <Sz Sz> = -1/9 for the spin-1 AKLT chain embedded in the ladder
  EXPECT_NEAR(spin_correlation_closed(0.0, 1), -1.0 / 9.0, 1e-14);
}

TEST(Transfer, CorrelationLengthIsTwiceEntanglementLength) {
  for (double u : {0.0, 0.5, 2.0, 5.0})
    EXPECT_NEAR(correlation_length(u), 2.0 * entanglement_length_closed(u),
                1e-12);
}

TEST(Transfer, MirrorQuantitiesAgree) {
  for (double v : {0.2, 0.5}) {
    const double u = 1.0 / v;
    EXPECT_NEAR(correlation_length_inv(v), correlation_length(u), 1e-9);
    const DensityMatrix a = rho_single_tdl_inv(v);
    const DensityMatrix b = rho_single_tdl(u);
    EXPECT_LT((a.matrix - b.matrix).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Transfer, DensityMatricesAreNormalizedAndPsd) {
  for (double u : {0.0, 0.37, 1.0, 2.5})
    for (long long n : {1LL, 4LL, 1000LL}) {
      const DensityMatrix rho = rho_pair_tdl(u, n, 0);
      EXPECT_NEAR(rho.matrix.trace(), 1.0, 1e-10);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho.matrix);
      EXPECT_GT(es.eigenvalues().minCoeff(), -1e-9);
    }
}
