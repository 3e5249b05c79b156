// Brute-force exact computations at oracle scale (up to 8 rungs): partial
// traces, exact entropies, Haar-averaged overlaps, energy residuals and the
// dimer correlator. Ground truth for every closed form in the library.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "ladder/model.hpp"
#include "ladder/mps.hpp"
#include "ladder/rung_basis.hpp"
#include "ladder/transfer.hpp"

namespace ladder::oracle {

namespace detail {

// Splits each basis index into (kept, environment) digits and accumulates the
// state as a (kept x environment) matrix; the reduced density matrix is then
// a single rank-revealing product. The full 4^L x 4^L density matrix is never
// materialized.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> group_indices(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& psi,
    const std::vector<int>& keep, int rungs) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= rungs)
      throw std::invalid_argument("partial_trace: rung index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep must be increasing");
  }
  const long dim = 1L << (2 * rungs);
  if (psi.size() != dim)
    throw std::invalid_argument("partial_trace: state size mismatch");
  std::vector<char> kept(rungs, 0);
  for (int k : keep) kept[k] = 1;
  const long dk = 1L << (2 * keep.size());
  const long de = dim / dk;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(dk, de);
  for (long idx = 0; idx < dim; ++idx) {
    long ik = 0, ie = 0;
    for (int r = 0; r < rungs; ++r) {
      const int d = static_cast<int>(idx >> (2 * (rungs - 1 - r))) & 3;
      if (kept[r])
        ik = (ik << 2) | d;
      else
        ie = (ie << 2) | d;
    }
    m(ik, ie) = psi[idx];
  }
  return m;
}

}  // namespace detail

inline Eigen::MatrixXd partial_trace(const Eigen::VectorXd& psi,
                                     const std::vector<int>& keep, int rungs) {
  const auto m = detail::group_indices<double>(psi, keep, rungs);
  return m * m.transpose();
}

inline Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd& psi,
                                      const std::vector<int>& keep,
                                      int rungs) {
  const auto m = detail::group_indices<std::complex<double>>(psi, keep, rungs);
  return m * m.adjoint();
}

// Tr_env |a><b|, the cross term needed for superposition density matrices.
inline Eigen::MatrixXd partial_trace_cross(const Eigen::VectorXd& a,
                                           const Eigen::VectorXd& b,
                                           const std::vector<int>& keep,
                                           int rungs) {
  const auto ma = detail::group_indices<double>(a, keep, rungs);
  const auto mb = detail::group_indices<double>(b, keep, rungs);
  return ma * mb.transpose();
}

// Normalized MP ground state at finite size.
inline Eigen::VectorXd ground_state(double u, int rungs, int offset = 0) {
  Eigen::VectorXd psi = build_state(u, rungs, offset);
  return psi / psi.norm();
}

// || sum_j h_{j,j+1} |psi0> ||: zero for the exact ground state.
inline double energy_residual(double u, int rungs) {
  const Eigen::VectorXd psi = ground_state(u, rungs);
  const Mat16 h = local_hamiltonian(u);
  return apply_local_sum(h, rungs, psi).norm();
}

struct MonteCarloEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
};

namespace detail {

// Haar sample on S^3: two complex amplitudes from four normalized Gaussians.
inline std::pair<std::complex<double>, std::complex<double>> haar_pair(
    std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double x[4];
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& c : x) {
      c = gauss(rng);
      nrm += c * c;
    }
  } while (nrm == 0.0);
  const double inv = 1.0 / std::sqrt(nrm);
  return {{x[0] * inv, x[1] * inv}, {x[2] * inv, x[3] * inv}};
}

inline void kahan_add(double term, double& sum, double& comp) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace detail

// Haar average of the overlap <phi(u)|phi(u+delta)> with shared superposition
// coefficients (a, b) at the two parameter values.
inline MonteCarloEstimate average_fidelity(double u, double delta, int rungs,
                                           long long samples,
                                           std::uint64_t seed = 0x5EED) {
  if (samples < 1) throw std::invalid_argument("average_fidelity: samples < 1");
  const double u2 = u + delta;
  const Eigen::VectorXd p1a = ground_state(u, rungs, 0);
  const Eigen::VectorXd p2a = ground_state(u, rungs, 1);
  const Eigen::VectorXd p1b = ground_state(u2, rungs, 0);
  const Eigen::VectorXd p2b = ground_state(u2, rungs, 1);
  const auto [f1a, f2a] = orthogonalize(p1a, p2a);
  const auto [f1b, f2b] = orthogonalize(p1b, p2b);
  // 2x2 overlap matrix between the orthonormal pairs; everything else is
  // scalar arithmetic per sample.
  const double g11 = f1a.dot(f1b), g12 = f1a.dot(f2b);
  const double g21 = f2a.dot(f1b), g22 = f2a.dot(f2b);
  std::mt19937_64 rng(seed);
  double sum = 0.0, comp = 0.0, sumsq = 0.0, compsq = 0.0;
  for (long long k = 0; k < samples; ++k) {
    const auto [a, b] = detail::haar_pair(rng);
    const std::complex<double> overlap = std::norm(a) * g11 +
                                         std::norm(b) * g22 +
                                         a * std::conj(b) * g12 +
                                         std::conj(a) * b * g21;
    const double f = overlap.real();
    detail::kahan_add(f, sum, comp);
    detail::kahan_add(f * f, sumsq, compsq);
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.value = sum / samples;
  const double var =
      std::max(0.0, sumsq / samples - est.value * est.value);
  est.stderr_ = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
  return est;
}

// <S^z_{1,0} S^z_{1,n}> in the dimerized state with rung 0 opening a cell.
inline double spin_correlation(double u, int rungs, long long n) {
  check_oracle_size(rungs);
  if (n < 1 || n >= rungs)
    throw std::invalid_argument("spin_correlation: need 1 <= n < rungs");
  const Eigen::VectorXd psi = ground_state(u, rungs);
  const Mat4 sz = spin_operator(1, 'z').matrix;
  const Mat16 both = kron44(sz, sz);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(psi.size());
  ladder::detail::apply_two_rung<double>(both, 0, static_cast<int>(n), rungs,
                                         psi, out);
  return psi.dot(out);
}

// Dimer operator D_i = S_{1,i} . (S_{1,i+1} - S_{1,i-1}) applied matrix-free.
inline Eigen::VectorXd apply_dimer(const Eigen::VectorXd& psi, int site,
                                   int rungs) {
  const Mat16 d11 = cross_rung_exchange(1, 1);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(psi.size());
  const int next = (site + 1) % rungs;
  const int prev = (site + rungs - 1) % rungs;
  ladder::detail::apply_two_rung<double>(d11, site, next, rungs, psi, out);
  Eigen::VectorXd neg = Eigen::VectorXd::Zero(psi.size());
  ladder::detail::apply_two_rung<double>(d11, site, prev, rungs, psi, neg);
  return out - neg;
}

// C_D(n) = <D_i D_{i+n}> in the fixed dimerized state psi1.
inline double dimer_correlation(double u, int rungs, long long n,
                                int base_site = 0) {
  check_oracle_size(rungs);
  if (n < 1 || n > rungs - 2)
    throw std::invalid_argument("dimer_correlation: need 1 <= n <= rungs-2");
  const Eigen::VectorXd psi = ground_state(u, rungs);
  const Eigen::VectorXd right =
      apply_dimer(psi, static_cast<int>((base_site + n) % rungs), rungs);
  const Eigen::VectorXd left = apply_dimer(psi, base_site, rungs);
  return left.dot(right);
}

}  // namespace ladder::oracle
