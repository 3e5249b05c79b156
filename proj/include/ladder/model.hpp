// Coupling constants of the one-parameter ladder model, the local projector
// Hamiltonian, the full ladder Hamiltonian at oracle scale and the
// ground-state energy density.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ladder/mps.hpp"
#include "ladder/rung_basis.hpp"

namespace ladder {

struct CouplingSet {
  double u = 0.0;
  double eps0 = 1.0, eps1 = 0.0, eps2 = 0.0;
  double J = 0.0, J_r = 0.0, J_d = 0.0, V = 0.0, K = 0.0;
};

inline CouplingSet couplings(double u, double eps0 = 1.0) {
  if (eps0 <= 0.0) throw std::invalid_argument("couplings: eps0 must be > 0");
  const double u2 = u * u, u4 = u2 * u2;
  CouplingSet c;
  c.u = u;
  c.eps0 = eps0;
  c.K = c.J_r = eps0 * (u2 - 1.0) * (u2 + 3.0) / 2.0;
  c.J_d = 0.0;
  c.V = eps0 * (5.0 * u4 + 2.0 * u2 + 9.0) / 4.0;
  c.J = 3.0 * eps0 * (u4 + 10.0 * u2 + 5.0) / 16.0;
  c.eps1 = eps0 * (3.0 * u4 + 14.0 * u2 + 15.0) / 8.0;
  c.eps2 = eps0 * (5.0 * u4 + 18.0 * u2 + 9.0) / 8.0;
  return c;
}

// Ground-state energy per rung, -(3/64) eps0 (7u^4 + 22u^2 + 19).
inline double ground_energy_per_rung(double u, double eps0 = 1.0) {
  const double u2 = u * u;
  return -3.0 / 64.0 * eps0 * (7.0 * u2 * u2 + 22.0 * u2 + 19.0);
}

// h_{i,i+1} = sum_JM eps_J |psi_JM><psi_JM|: rank 9, PSD.
inline Mat16 local_hamiltonian(double u, double eps0 = 1.0) {
  const CouplingSet c = couplings(u, eps0);
  Mat16 h = Mat16::Zero();
  const double eps[3] = {c.eps0, c.eps1, c.eps2};
  for (int J = 0; J <= 2; ++J)
    for (int M = -J; M <= J; ++M) {
      const Vec16 v = two_rung_multiplet(u, J, M);
      h += eps[J] * v * v.transpose();
    }
  return h;
}

namespace detail {

// Generic two-rung operator application on a dense 4^rungs state vector.
template <typename Scalar>
void apply_two_rung(const Eigen::Matrix<Scalar, 16, 16>& op, int rung_a,
                    int rung_b, int rungs,
                    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                    Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out) {
  const long dim = 1L << (2 * rungs);
  const int sa = 2 * (rungs - 1 - rung_a);
  const int sb = 2 * (rungs - 1 - rung_b);
  for (long idx = 0; idx < dim; ++idx) {
    const Scalar amp = in[idx];
    if (amp == Scalar(0)) continue;
    const int ma = static_cast<int>(idx >> sa) & 3;
    const int mb = static_cast<int>(idx >> sb) & 3;
    const long base = idx & ~((3L << sa) | (3L << sb));
    const int col = 4 * ma + mb;
    for (int row = 0; row < 16; ++row) {
      const Scalar w = op(row, col);
      if (w == Scalar(0)) continue;
      const long tgt =
          base | (static_cast<long>(row / 4) << sa) | (static_cast<long>(row % 4) << sb);
      out[tgt] += w * amp;
    }
  }
}

}  // namespace detail

// Matrix-free application of sum_j h_{j,j+1} (periodic).
inline Eigen::VectorXd apply_local_sum(const Mat16& h, int rungs,
                                       const Eigen::VectorXd& state) {
  check_oracle_size(rungs);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(state.size());
  for (int j = 0; j < rungs; ++j)
    detail::apply_two_rung<double>(h, j, (j + 1) % rungs, rungs, state, out);
  return out;
}

// Heisenberg exchange between two spin-1/2 sites of a two-rung plaquette:
// leg_a on the first rung, leg_b on the second.
inline Mat16 cross_rung_exchange(int leg_a, int leg_b) {
  CMat16 m = CMat16::Zero();
  for (char ax : {'x', 'y', 'z'}) {
    const CMat4 a = spin_operator_c(leg_a, ax);
    const CMat4 b = spin_operator_c(leg_b, ax);
    CMat16 term;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) term.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    m += term;
  }
  if (m.imag().cwiseAbs().maxCoeff() > 1e-12)
    throw std::domain_error("cross_rung_exchange: unexpected imaginary part");
  return m.real();
}

// Two-rung bond term of the Hamiltonian, including the on-rung exchange of
// the bond's first rung (each rung is the first member of exactly one bond
// under periodic boundaries). K multiplies both biquadratic terms.
inline Mat16 bond_term(const CouplingSet& c) {
  const Mat16 d11 = cross_rung_exchange(1, 1);
  const Mat16 d22 = cross_rung_exchange(2, 2);
  const Mat16 d12 = cross_rung_exchange(1, 2);
  const Mat16 d21 = cross_rung_exchange(2, 1);
  const Mat16 rung_l = kron44(rung_exchange(), Mat4::Identity());
  const Mat16 rung_r = kron44(Mat4::Identity(), rung_exchange());
  return c.J * (d11 + d22) + c.J_r * rung_l + c.V * d11 * d22 +
         c.J_d * (d12 + d21) + c.K * (d12 * d21 - rung_l * rung_r);
}

// Local term actually generated by the coupling form: the singlet channel is
// weighted by the *unnormalized* J=0 projector, so its eigenvalue is
// eps0 (3 + u^4) instead of eps0. The zero space is unchanged.
inline Mat16 local_coupling_term(double u, double eps0 = 1.0) {
  Mat16 h = local_hamiltonian(u, eps0);
  const Vec16 s = two_rung_multiplet(u, 0, 0);
  const double u4 = u * u * u * u;
  h += eps0 * (2.0 + u4) * s * s.transpose();
  return h;
}

// Dense ladder Hamiltonian built term by term from the coupling constants;
// oracle scale only. Equals sum_j local_coupling_term + 2N E0 identically.
inline Eigen::MatrixXd coupling_hamiltonian(const CouplingSet& c, int rungs) {
  if (rungs != 2 && rungs != 4)
    throw std::invalid_argument(
        "coupling_hamiltonian: dense build supports 2 or 4 rungs");
  const Mat16 bond = bond_term(c);
  const long dim = 1L << (2 * rungs);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd col(dim), out(dim);
  for (long k = 0; k < dim; ++k) {
    col.setZero();
    col[k] = 1.0;
    out.setZero();
    for (int j = 0; j < rungs; ++j)
      detail::apply_two_rung<double>(bond, j, (j + 1) % rungs, rungs, col, out);
    h.col(k) = out;
  }
  return h;
}

// Total S^z as a dense diagonal, for symmetry checks.
inline Eigen::VectorXd total_sz_diagonal(int rungs) {
  check_oracle_size(rungs);
  const long dim = 1L << (2 * rungs);
  // S^z eigenvalues of the rung basis (t+, t0, t-, s).
  const double sz[4] = {1.0, 0.0, -1.0, 0.0};
  Eigen::VectorXd diag(dim);
  for (long idx = 0; idx < dim; ++idx) {
    double total = 0.0;
    for (int k = 0; k < rungs; ++k)
      total += sz[(idx >> (2 * k)) & 3];
    diag[idx] = total;
  }
  return diag;
}

}  // namespace ladder
