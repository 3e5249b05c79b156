#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "ladder/rung_basis.hpp"

using namespace ladder;

TEST(RungBasis, StatesAreOrthonormal) {
  const char* labels[4] = {"t+", "t0", "t-", "s"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(rung_state(labels[i]).dot(rung_state(labels[j])),
                  i == j ? 1.0 : 0.0, 1e-15);
}

TEST(RungBasis, SpinOperatorsSatisfySuTwoAlgebra) {
  for (int leg : {1, 2}) {
    const CMat4 sx = spin_operator_c(leg, 'x');
    const CMat4 sy = spin_operator_c(leg, 'y');
    const CMat4 sz = spin_operator_c(leg, 'z');
    const CMat4 comm = sx * sy - sy * sx;
    EXPECT_LT((comm - std::complex<double>(0, 1) * sz).cwiseAbs().maxCoeff(),
              1e-14);
    // spin-1/2 Casimir: S^2 = 3/4 on each leg
    const CMat4 s2 = sx * sx + sy * sy + sz * sz;
    EXPECT_LT((s2 - 0.75 * CMat4::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(RungBasis, LegOperatorsCommute) {
  for (char a : {'x', 'y', 'z'})
    for (char b : {'x', 'y', 'z'}) {
      const CMat4 o1 = spin_operator_c(1, a);
      const CMat4 o2 = spin_operator_c(2, b);
      EXPECT_LT((o1 * o2 - o2 * o1).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(RungBasis, RungExchangeEigenvalues) {
  // S1.S2 = 1/4 on triplets, -3/4 on the singlet
  const Mat4 ex = rung_exchange();
  const Vec4 s = rung_state("s");
  const Vec4 t = rung_state("t0");
  EXPECT_NEAR((ex * s).dot(s), -0.75, 1e-14);
  EXPECT_NEAR((ex * t).dot(t), 0.25, 1e-14);
  EXPECT_LT((ex * s + 0.75 * s).norm(), 1e-14);
}

TEST(RungBasis, ClebschGordanColumnsAreOrthonormal) {
  for (int J = 0; J <= 2; ++J)
    for (int M = -J; M <= J; ++M) {
      const Vec16 v = clebsch_tt(J, M);
      EXPECT_NEAR(v.norm(), 1.0, 1e-14);
      for (int J2 = 0; J2 <= 2; ++J2)
        for (int M2 = -J2; M2 <= J2; ++M2) {
          if (J == J2 && M == M2) continue;
          EXPECT_NEAR(v.dot(clebsch_tt(J2, M2)), 0.0, 1e-14);
        }
    }
}

TEST(RungBasis, MultipletsAreOrthonormalForFixedU) {
  for (double u : {0.0, 0.7, 2.0}) {
    std::vector<Vec16> vs;
    for (int J = 0; J <= 2; ++J)
      for (int M = -J; M <= J; ++M) vs.push_back(two_rung_multiplet(u, J, M));
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j)
        EXPECT_NEAR(vs[i].dot(vs[j]), i == j ? 1.0 : 0.0, 1e-12);
  }
}

TEST(RungBasis, MultipletsCarryTotalSpinJ) {
  // (S1+S2)^2 over the two-rung plaquette gives J(J+1)
  CMat16 s2 = CMat16::Zero();
  for (char ax : {'x', 'y', 'z'}) {
    CMat4 tot = spin_operator_c(1, ax) + spin_operator_c(2, ax);
    CMat16 big = kron(tot, CMat4::Identity()) + kron(CMat4::Identity(), tot);
    s2 += big * big;
  }
  for (double u : {0.0, 1.3})
    for (int J = 0; J <= 2; ++J)
      for (int M = -J; M <= J; ++M) {
        const Vec16 v = two_rung_multiplet(u, J, M);
        const Eigen::Matrix<std::complex<double>, 16, 1> sv =
            s2 * v.cast<std::complex<double>>();
        EXPECT_LT((sv - double(J * (J + 1)) *
                            v.cast<std::complex<double>>())
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-12)
            << "u=" << u << " J=" << J << " M=" << M;
      }
}

TEST(RungBasis, SingletChannelMixesWithU) {
  // J=0 multiplet: (sqrt3 |ss> - u^2 |tt>_{J=0}) / sqrt(3 + u^4)
  const double u = 1.5;
  const Vec16 v = two_rung_multiplet(u, 0, 0);
  const Vec16 ss = kron4(rung_state("s"), rung_state("s"));
  EXPECT_NEAR(v.dot(ss), std::sqrt(3.0 / (3.0 + std::pow(u, 4))), 1e-12);
}
