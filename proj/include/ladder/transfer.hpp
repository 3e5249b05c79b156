// Transfer operators on the doubled auxiliary space and thermodynamic-limit
// contractions: reduced density matrices of one and two rungs, the spin
// correlator and the correlation length.
//
// The state is dimerized, so the unit cell is two rungs g1.g2 and all
// dominant-eigenvector analysis acts on the 4x4 two-rung transfer matrix.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladder/mps.hpp"
#include "ladder/rung_basis.hpp"

namespace ladder {

struct DensityMatrix {
  Eigen::MatrixXd matrix;
  std::vector<std::string> basis_labels;
  long long separation = 0;  // pair density matrices only
  int parity = 0;
};

inline std::vector<std::string> rung_labels() {
  return {"t+", "t0", "t-", "s"};
}

inline std::vector<std::string> pair_labels() {
  std::vector<std::string> out;
  for (const auto& a : rung_labels())
    for (const auto& b : rung_labels()) out.push_back(a + b);
  return out;
}

// Contraction sum_m ket(a,b)[m] bra(a',b')[m]; row index a*2+a'.
inline Mat4 transfer_matrix(const GMatrix& ket, const GMatrix& bra) {
  Mat4 t;
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
          t(2 * a + ap, 2 * b + bp) = ket.entry(a, b).dot(bra.entry(ap, bp));
  return t;
}

inline Mat4 transfer_matrix(double u) {
  const GMatrix g = g_matrix(u);
  return transfer_matrix(g, g);
}

// Transfer matrix with a physical operator sandwiched between bra and ket.
inline Mat4 operator_tm(const GMatrix& ket, const GMatrix& bra,
                        const Mat4& op) {
  Mat4 t;
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
          t(2 * a + ap, 2 * b + bp) =
              bra.entry(ap, bp).transpose() * op * ket.entry(a, b);
  return t;
}

// Transfer matrices with one open physical index pair, indexed m_ket*4+m_bra.
inline std::array<Mat4, 16> open_tm(const GMatrix& ket, const GMatrix& bra) {
  std::array<Mat4, 16> out;
  for (int mk = 0; mk < 4; ++mk)
    for (int mb = 0; mb < 4; ++mb) {
      Mat4 t;
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
          for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
              t(2 * a + ap, 2 * b + bp) =
                  ket.entry(a, b)[mk] * bra.entry(ap, bp)[mb];
      out[4 * mk + mb] = t;
    }
  return out;
}

// Dominant-eigenvalue environment of the two-rung cell g1.g2.
struct CellEnv {
  GMatrix g1, g2;
  Mat4 t1, t2;          // per-rung transfer matrices; cell = t1 * t2
  double lambda = 0.0;  // dominant eigenvalue of the cell
  Eigen::Vector4d left, right;  // l^T C = lambda l^T, C r = lambda r, l.r = 1
};

namespace detail {

inline Eigen::Vector4d dominant_real_eigenvector(const Mat4& m,
                                                 double& lambda) {
  Eigen::EigenSolver<Mat4> es(m);
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(es.eigenvalues()[i]) > std::abs(es.eigenvalues()[best]))
      best = i;
  const auto lam = es.eigenvalues()[best];
  if (std::abs(lam.imag()) > 1e-10 * std::abs(lam))
    throw std::domain_error("transfer cell: dominant eigenvalue not real");
  lambda = lam.real();
  Eigen::Vector4cd v = es.eigenvectors().col(best);
  if (v.imag().cwiseAbs().maxCoeff() > 1e-10 * v.norm())
    throw std::domain_error("transfer cell: dominant eigenvector not real");
  return v.real();
}

inline Mat4 mat_pow(Mat4 base, long long e) {
  Mat4 out = Mat4::Identity();
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

}  // namespace detail

inline CellEnv cell_environment(const GMatrix& g1, const GMatrix& g2) {
  CellEnv env;
  env.g1 = g1;
  env.g2 = g2;
  env.t1 = transfer_matrix(g1, g1);
  env.t2 = transfer_matrix(g2, g2);
  const Mat4 cell = env.t1 * env.t2;
  double lam_r = 0.0, lam_l = 0.0;
  env.right = detail::dominant_real_eigenvector(cell, lam_r);
  env.left = detail::dominant_real_eigenvector(cell.transpose(), lam_l);
  env.lambda = lam_r;
  const double ip = env.left.dot(env.right);
  if (std::abs(ip) < 1e-13)
    throw std::domain_error("transfer cell: left/right eigenvectors orthogonal");
  env.left /= ip;
  return env;
}

inline CellEnv cell_environment(double u) {
  return cell_environment(g_matrix(u), g_matrix(-u));
}

inline CellEnv cell_environment_inv(double v) {
  return cell_environment(g_matrix_inv(v), g_matrix_inv(-v));
}

// Pieces of the window l^T . first . mid . last . tail . r / scale where
// `first` sits at rung 0 of a cell and `last` at rung n.
struct WindowParts {
  Mat4 mid;    // rungs 1 .. n-1, cell blocks normalized by lambda
  Mat4 tail;   // padding rung closing the final cell (or identity)
  double scale;  // residual lambda powers not absorbed into mid
};

inline WindowParts make_window(const CellEnv& env, long long n) {
  if (n < 1) throw std::invalid_argument("window: separation must be >= 1");
  WindowParts w;
  const long long inner = n - 1;
  const long long q = inner / 2;
  const Mat4 cell_n = (env.t2 * env.t1) / env.lambda;
  w.mid = detail::mat_pow(cell_n, q);
  if (inner % 2 == 1) w.mid = w.mid * env.t2;
  // n even: window spans an odd rung count, pad with the cell's second rung.
  w.tail = (n % 2 == 0) ? env.t2 : Mat4::Identity();
  const int leftover = (n % 2 == 0) ? 2 : 1 + static_cast<int>(inner % 2);
  w.scale = std::pow(env.lambda, leftover);
  return w;
}

inline double window_contract(const CellEnv& env, const WindowParts& w,
                              const Mat4& first, const Mat4& last) {
  return env.left.dot(first * w.mid * last * w.tail * env.right) / w.scale;
}

namespace detail {

inline DensityMatrix finalize_density(Eigen::MatrixXd rho, long long sep,
                                      int parity,
                                      std::vector<std::string> labels) {
  rho = 0.5 * (rho + rho.transpose()).eval();
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-8)
    throw std::domain_error("density matrix: trace deviates from 1 by " +
                            std::to_string(tr - 1.0));
  rho /= tr;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::domain_error("density matrix: negative eigenvalue");
  return {std::move(rho), std::move(labels), sep, parity};
}

}  // namespace detail

// One-rung reduced density matrix in the TDL, via the dominant eigenvector
// of the two-rung cell. Closed form: diag(1,1,1,u^2) / (u^2+3).
inline DensityMatrix rho_single_cell(const CellEnv& env, int parity = 0) {
  const GMatrix& ga = (parity == 0) ? env.g1 : env.g2;
  const Mat4& tb = (parity == 0) ? env.t2 : env.t1;
  const auto open = open_tm(ga, ga);
  Eigen::MatrixXd rho(4, 4);
  for (int mk = 0; mk < 4; ++mk)
    for (int mb = 0; mb < 4; ++mb)
      rho(mk, mb) =
          env.left.dot(open[4 * mk + mb] * tb * env.right) / env.lambda;
  return detail::finalize_density(std::move(rho), 0, parity, rung_labels());
}

inline DensityMatrix rho_single_tdl(double u) {
  return rho_single_cell(cell_environment(u));
}

inline DensityMatrix rho_single_tdl_inv(double v) {
  return rho_single_cell(cell_environment_inv(v));
}

// Two-rung reduced density matrix at separation n (rungs i and i+n), TDL.
// parity selects whether rung i sits at the start of a (g1, g2) cell.
inline DensityMatrix rho_pair_cell(const CellEnv& env, long long n,
                                   int parity = 0) {
  CellEnv e = env;
  if (parity == 1) {
    e = env;
    std::swap(e.g1, e.g2);
    std::swap(e.t1, e.t2);
    // left/right eigenvectors of the swapped cell t2*t1.
    const Mat4 cell = e.t1 * e.t2;
    double lam = 0.0;
    e.right = detail::dominant_real_eigenvector(cell, lam);
    e.left = detail::dominant_real_eigenvector(cell.transpose(), lam);
    e.lambda = lam;
    e.left /= e.left.dot(e.right);
  }
  const auto open_a = open_tm(e.g1, e.g1);
  const GMatrix& gb = (n % 2 == 0) ? e.g1 : e.g2;
  const auto open_b = open_tm(gb, gb);
  const WindowParts w = make_window(e, n);
  Eigen::MatrixXd rho(16, 16);
  const Eigen::Vector4d tail_r = w.tail * e.right;
  for (int i = 0; i < 16; ++i) {    // i = m1_ket*4 + m1_bra
    const Eigen::RowVector4d head =
        e.left.transpose() * open_a[i] * w.mid;
    for (int j = 0; j < 16; ++j) {  // j = m2_ket*4 + m2_bra
      const double val = (head * open_b[j] * tail_r)(0) / w.scale;
      const int r = (i / 4) * 4 + (j / 4);
      const int c = (i % 4) * 4 + (j % 4);
      rho(r, c) = val;
    }
  }
  return detail::finalize_density(std::move(rho), n, parity, pair_labels());
}

inline DensityMatrix rho_pair_tdl(double u, long long n, int parity = 0) {
  return rho_pair_cell(cell_environment(u), n, parity);
}

inline DensityMatrix rho_pair_tdl_inv(double v, long long n, int parity = 0) {
  return rho_pair_cell(cell_environment_inv(v), n, parity);
}

// C_S(n) = <S^z_{1,i} S^z_{1,i+n}>, closed form, n in rungs, rung i at the
// start of a dimer cell. Even separations decay as (z+ z-)^(n/2); odd ones
// carry one extra z- factor and a sign flip.
inline double spin_correlation_closed(double u, long long n) {
  if (n < 1) throw std::invalid_argument("spin_correlation: n must be >= 1");
  const double s = u * u + 3.0;
  const double zp = (u + 1.0) * (u + 1.0) / s;
  const double zm = (u - 1.0) * (u - 1.0) / s;
  if (n % 2 == 0) return std::pow(zp * zm, static_cast<double>(n / 2)) / s;
  return -zm * std::pow(zp * zm, static_cast<double>((n - 1) / 2)) / s;
}

// Same correlator evaluated from operator-inserted transfer strings.
inline double spin_correlation_tm(double u, long long n, int parity = 0) {
  if (n < 1) throw std::invalid_argument("spin_correlation: n must be >= 1");
  CellEnv env = cell_environment(u);
  if (parity == 1) env = cell_environment(g_matrix(-u), g_matrix(u));
  const Mat4 sz1 = spin_operator(1, 'z').matrix;
  const Mat4 o_first = operator_tm(env.g1, env.g1, sz1);
  const GMatrix& gb = (n % 2 == 0) ? env.g1 : env.g2;
  const Mat4 o_last = operator_tm(gb, gb, sz1);
  const WindowParts w = make_window(env, n);
  return window_contract(env, w, o_first, o_last);
}

// Per-rung decay length of C_S(n): the even-separation envelope loses a
// factor z+ z- every two rungs, so xi_C = -2 / ln(z+ z-). Zero at |u| = 1
// where correlations vanish identically.
inline double correlation_length(double u) {
  const double s = u * u + 3.0;
  const double zz = (u + 1.0) * (u + 1.0) * (u - 1.0) * (u - 1.0) / (s * s);
  if (zz == 0.0) return 0.0;
  return -2.0 / std::log(zz);
}

inline double correlation_length_inv(double v) {
  const double s = 1.0 + 3.0 * v * v;
  const double zz =
      (1.0 + v) * (1.0 + v) * (1.0 - v) * (1.0 - v) / (s * s);
  if (zz == 0.0) return 0.0;
  return -2.0 / std::log(zz);
}

}  // namespace ladder
