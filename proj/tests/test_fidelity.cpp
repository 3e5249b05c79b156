#include <gtest/gtest.h>

#include <cmath>

#include "ladder/fidelity.hpp"
#include "ladder/oracle.hpp"

using namespace ladder;

TEST(Fidelity, SelfOverlapIsOne) {
  for (double u : {0.5, 1.0, 2.0, 5.0})
    for (long long n : {10LL, 1000LL, 1000000LL})
      EXPECT_NEAR(fidelity_closed(u, u, n).value, 1.0, 1e-10)
          << "u=" << u << " N=" << n;
}

TEST(Fidelity, TwoRungSystemIsDegenerate) {
  // at 2N=2 the two dimer coverings are the same state by trace cyclicity,
  // so the Haar-averaged overlap is undefined
  EXPECT_THROW(log_fidelity_u(0.5, 0.6, 1), std::domain_error);
}

TEST(Fidelity, SymmetricInArguments) {
  EXPECT_NEAR(log_fidelity_u(0.8, 1.3, 200), log_fidelity_u(1.3, 0.8, 200),
              1e-12);
}

TEST(Fidelity, EvenInU) {
  EXPECT_NEAR(log_fidelity_u(0.8, 1.3, 200), log_fidelity_u(-0.8, -1.3, 200),
              1e-12);
}

TEST(Fidelity, DecaysWithSystemSize) {
  const double f1 = log_fidelity_u(1.0, 1.1, 100);
  const double f2 = log_fidelity_u(1.0, 1.1, 200);
  EXPECT_LT(f2, f1);
  EXPECT_LT(f1, 0.0);
}

TEST(Fidelity, AsymptoticRate) {
  const double la = std::log(alpha_asymptotic(1.0, 1.1));
  for (long long n : {1000LL, 100000LL})
    EXPECT_NEAR(log_fidelity_u(1.0, 1.1, n) / n, la, 1e-12);
}

TEST(Fidelity, AlphaIsOneOnTheDiagonal) {
  for (double u : {0.3, 1.0, 4.0})
    EXPECT_NEAR(alpha_asymptotic(u, u), 1.0, 1e-14);
}

TEST(Fidelity, MirrorFamilyAgreesWithDirect) {
  // v = 1/u parametrization reproduces the direct value where both converge
  const double u1 = 2.0, u2 = 2.5;
  EXPECT_NEAR(log_fidelity_inv(1.0 / u1, 1.0 / u2, 500),
              log_fidelity_u(u1, u2, 500), 1e-9);
}

TEST(Fidelity, MatchesMonteCarloOracle) {
  const auto mc = oracle::average_fidelity(1.0, 0.1, 6, 2000);
  const double closed = fidelity_closed(1.0, 1.1, 3).value;
  EXPECT_LT(std::abs(mc.value - closed), 3.0 * mc.stderr_);
}

TEST(Fidelity, DegenerateOverlapRejected) {
  // at u=0 the two dimerized states coincide; the Haar average is undefined
  EXPECT_THROW(log_fidelity_u(0.0, 0.1, 100), std::domain_error);
}

TEST(Curvature, ClosedFormValue) {
  // D(u) = -6N/(u^2+3)^2 for the separable-norm variant
  for (double u : {0.5, 1.0, 2.0}) {
    const double s = u * u + 3.0;
    const Curvature c = d_of_u(u, 100000);
    EXPECT_NEAR(c.d_unnormalized, -6.0e5 / (s * s), 1e-2 * 6.0e5 / (s * s));
    EXPECT_NEAR(c.d_normalized, c.d_unnormalized,
                1e-4 * std::abs(c.d_unnormalized));
  }
}

TEST(Curvature, LinearInN) {
  const double d1 = std::abs(d_of_u(1.0, 100000).d_unnormalized);
  const double d2 = std::abs(d_of_u(1.0, 200000).d_unnormalized);
  EXPECT_NEAR(d2 / d1, 2.0, 0.02);
}

TEST(Curvature, SusceptibilityMatchesCurvatureMagnitude) {
  const double chi = chi_f(1.0, 10000);
  const double d = d_of_u(1.0, 10000).d_unnormalized;
  EXPECT_GT(chi, 0.0);
  EXPECT_LT(d, 0.0);
  EXPECT_NEAR(chi / std::abs(d), 1.0, 0.01);
}

TEST(Curvature, MirrorVariantClosedForm) {
  // D'(v) -> -6N/(3v^2+1)^2 away from the critical window
  const double v = 0.5;
  const long long n = 1000;
  const double expect = -6.0 * n / std::pow(3.0 * v * v + 1.0, 2);
  EXPECT_NEAR(d_tilde(v, n).d_unnormalized, expect, 1e-3 * std::abs(expect));
}

TEST(Curvature, SingularPointsRejected) {
  EXPECT_THROW(d_of_u(0.0, 100), std::invalid_argument);
  EXPECT_THROW(d_tilde(0.0, 100), std::invalid_argument);
  EXPECT_THROW(chi_f(1.0, 100, 0.0), std::invalid_argument);
}

TEST(Collapse, EqualScalingVariableRowsAgree) {
  const CollapseDataset ds =
      collapse_dataset({100, 1000, 10000, 100000}, {0.02, 0.05, 0.1, 0.2});
  EXPECT_LT(ds.score, 0.02);
  EXPECT_EQ(ds.rows.size(), 16u);
  for (const CollapseRow& r : ds.rows)
    EXPECT_NEAR(r.scaling_x, r.N * r.v * r.v, 1e-12);
}

TEST(Collapse, ExponentEstimate) {
  const double nu = fit_collapse_exponent({1000, 10000, 100000});
  EXPECT_NEAR(nu, 2.0, 0.1);
}
