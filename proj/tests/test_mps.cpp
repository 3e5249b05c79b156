#include <gtest/gtest.h>

#include <cmath>

#include "ladder/mps.hpp"
#include "ladder/oracle.hpp"

using namespace ladder;

TEST(Mps, GMatrixEntries) {
  const GMatrix g = g_matrix(0.8);
  EXPECT_NEAR(g.entry(0, 0).dot(rung_state("s")), 0.8, 1e-15);
  EXPECT_NEAR(g.entry(0, 0).dot(rung_state("t0")), 1.0, 1e-15);
  EXPECT_NEAR(g.entry(0, 1).dot(rung_state("t+")), -std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.entry(1, 0).dot(rung_state("t-")), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.entry(1, 1).dot(rung_state("t0")), -1.0, 1e-15);
}

TEST(Mps, NormMatchesClosedForm) {
  for (double u : {0.0, 0.5, 1.0, 2.0})
    for (int rungs : {2, 4, 6, 8}) {
      const Eigen::VectorXd psi = build_state(u, rungs, 0);
      EXPECT_NEAR(std::log(psi.squaredNorm()), log_norm_sq(u, rungs / 2),
                  1e-10)
          << "u=" << u << " rungs=" << rungs;
    }
}

TEST(Mps, OverlapMatchesClosedForm) {
  for (double u : {0.0, 0.5, 1.0, 2.0})
    for (int rungs : {2, 4, 6, 8}) {
      const Eigen::VectorXd a = oracle::ground_state(u, rungs, 0);
      const Eigen::VectorXd b = oracle::ground_state(u, rungs, 1);
      EXPECT_NEAR(a.dot(b), overlap_closed_form(u, rungs / 2), 1e-10);
    }
}

TEST(Mps, OverlapLandmarkAtUOneFourRungs) {
  // p = [3*2^4 + (-2)^4] / (4^4 + 3*0) = 64/256
  EXPECT_NEAR(overlap_closed_form(1.0, 2), 0.25, 1e-14);
}

TEST(Mps, TranslationMapsTheTwoDimerStates) {
  // shifting the cell by one rung permutes the basis digits
  const int rungs = 4;
  const Eigen::VectorXd a = build_state(0.7, rungs, 0);
  const Eigen::VectorXd b = build_state(0.7, rungs, 1);
  Eigen::VectorXd shifted(a.size());
  for (long idx = 0; idx < a.size(); ++idx) {
    // rotate the base-4 digit string by one rung
    long rot = 0;
    for (int r = 0; r < rungs; ++r) {
      const int d = static_cast<int>(idx >> (2 * (rungs - 1 - r))) & 3;
      const int rto = (r + 1) % rungs;
      rot |= static_cast<long>(d) << (2 * (rungs - 1 - rto));
    }
    shifted[rot] = a[idx];
  }
  EXPECT_LT((shifted - b).norm() / b.norm(), 1e-12);
}

TEST(Mps, OrthogonalizeProducesOrthonormalPair) {
  const Eigen::VectorXd a = oracle::ground_state(0.5, 6, 0);
  const Eigen::VectorXd b = oracle::ground_state(0.5, 6, 1);
  const auto [f1, f2] = orthogonalize(a, b);
  EXPECT_NEAR(f1.norm(), 1.0, 1e-12);
  EXPECT_NEAR(f2.norm(), 1.0, 1e-12);
  EXPECT_NEAR(f1.dot(f2), 0.0, 1e-12);
}

TEST(Mps, OrthogonalizeRejectsParallelStates) {
  const Eigen::VectorXd a = oracle::ground_state(0.0, 4, 0);
  const Eigen::VectorXd b = oracle::ground_state(0.0, 4, 1);
  // at u=0 the two dimerized states coincide (p = 1)
  EXPECT_THROW(orthogonalize(a, b), std::domain_error);
}

TEST(Mps, OracleSizeGuard) {
  EXPECT_THROW(check_oracle_size(3), std::invalid_argument);
  EXPECT_THROW(check_oracle_size(10), std::invalid_argument);
  EXPECT_NO_THROW(check_oracle_size(8));
}

TEST(Mps, RescaledMirrorMatricesAgree) {
  // v g(1/v) has entries {1, v, sqrt2 v, ...}: same state up to overall scale
  const double v = 0.25;
  const GMatrix a = g_matrix_inv(v);
  const GMatrix b = g_matrix(1.0 / v);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      EXPECT_LT((a.entry(i, j) - v * b.entry(i, j)).norm(), 1e-14);
}
