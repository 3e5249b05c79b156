// Matrix-product ground states: g-matrices, finite-size trace-product states,
// closed-form norms and overlaps, Gram-Schmidt pair and superpositions.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "ladder/numerics.hpp"
#include "ladder/rung_basis.hpp"

namespace ladder {

// 2x2 matrix of rung vectors: entry(a, b) holds the 4 physical coefficients.
struct GMatrix {
  std::array<std::array<Vec4, 2>, 2> e;

  const Vec4& entry(int a, int b) const { return e[a][b]; }
};

inline GMatrix g_matrix(double u) {
  GMatrix g;
  const double r2 = std::sqrt(2.0);
  g.e[0][0] = u * rung_state("s") + rung_state("t0");
  g.e[0][1] = -r2 * rung_state("t+");
  g.e[1][0] = r2 * rung_state("t-");
  g.e[1][1] = u * rung_state("s") - rung_state("t0");
  return g;
}

// g(1/v) rescaled by v, for the large-u regime parametrized by v = 1/u.
// All transfer-matrix quantities are invariant under the rescaling.
inline GMatrix g_matrix_inv(double v) {
  GMatrix g;
  const double r2 = std::sqrt(2.0);
  g.e[0][0] = rung_state("s") + v * rung_state("t0");
  g.e[0][1] = -r2 * v * rung_state("t+");
  g.e[1][0] = r2 * v * rung_state("t-");
  g.e[1][1] = rung_state("s") - v * rung_state("t0");
  return g;
}

inline void check_oracle_size(int rungs) {
  if (rungs < 2 || rungs > 8 || rungs % 2 != 0)
    throw std::invalid_argument("rung count must be even and in [2, 8]");
}

// Unnormalized trace-product state over `rungs` rungs (periodic).
// offset 0 starts the chain with g(u), offset 1 with g(-u).
inline Eigen::VectorXd build_state(double u, int rungs, int offset = 0) {
  check_oracle_size(rungs);
  if (offset != 0 && offset != 1)
    throw std::invalid_argument("build_state: offset must be 0 or 1");
  std::array<GMatrix, 2> g = {g_matrix(u), g_matrix(-u)};
  const long dim = 1L << (2 * rungs);
  Eigen::VectorXd psi(dim);
  for (long idx = 0; idx < dim; ++idx) {
    Eigen::Matrix2d prod = Eigen::Matrix2d::Identity();
    for (int k = 0; k < rungs; ++k) {
      const int m = static_cast<int>(idx >> (2 * (rungs - 1 - k))) & 3;
      const GMatrix& gk = g[(k + offset) % 2];
      Eigen::Matrix2d site;
      site << gk.entry(0, 0)[m], gk.entry(0, 1)[m], gk.entry(1, 0)[m],
          gk.entry(1, 1)[m];
      prod = prod * site;
    }
    psi[idx] = prod.trace();
  }
  return psi;
}

// ln N0(u) with N0 = (u^2+3)^(2N) + 3 (u^2-1)^(2N); N counts rung pairs.
inline double log_norm_sq(double u, long long N) {
  const double u2 = u * u;
  return num::pow_sum({{1.0, u2 + 3.0}, {3.0, u2 - 1.0}}, 2 * N).log_abs;
}

// Normalized overlap p(u) = <psi1|psi2>, overflow-safe for any N.
inline double overlap_closed_form(double u, long long N) {
  const double u2 = u * u;
  const auto numer = num::pow_sum({{3.0, u2 + 1.0}, {1.0, u2 - 3.0}}, 2 * N);
  const auto denom = num::pow_sum({{1.0, u2 + 3.0}, {3.0, u2 - 1.0}}, 2 * N);
  return num::ratio(numer, denom);
}

// Gram-Schmidt pair (phi1, phi2) from normalized psi1, psi2.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> orthogonalize(
    const Eigen::VectorXd& psi1, const Eigen::VectorXd& psi2) {
  const double p = psi1.dot(psi2);
  const double residual = 1.0 - p * p;
  if (residual <= 1e-12)
    throw std::domain_error(
        "orthogonalize: degenerate pair (|<psi1|psi2>| = 1); the ground state "
        "is unique");
  Eigen::VectorXd phi2 = (psi2 - p * psi1) / std::sqrt(residual);
  return {psi1, phi2};
}

// a phi1 + b phi2 over an orthonormal pair; renormalizes if needed.
inline Eigen::VectorXcd superpose(std::complex<double> a,
                                  std::complex<double> b,
                                  const Eigen::VectorXd& phi1,
                                  const Eigen::VectorXd& phi2) {
  const double nrm = std::norm(a) + std::norm(b);
  if (nrm == 0.0) throw std::invalid_argument("superpose: a = b = 0");
  const double scale = 1.0 / std::sqrt(nrm);
  return (a * scale) * phi1.cast<std::complex<double>>() +
         (b * scale) * phi2.cast<std::complex<double>>();
}

}  // namespace ladder
