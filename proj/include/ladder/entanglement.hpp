// Von Neumann entropies S(i) and S(i,j), their derivatives, the entanglement
// length (closed form and fit) and Haar-averaged entanglement at finite size.
// Entropies are in bits throughout.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ladder/oracle.hpp"
#include "ladder/transfer.hpp"

namespace ladder {

namespace detail {

inline double entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (double lam : eigenvalues) {
    if (lam < -1e-9)
      throw std::domain_error("von_neumann: eigenvalue below -1e-9");
    if (lam <= 1e-12) continue;  // 0 log 0 := 0
    s -= lam * std::log2(lam);
  }
  return s;
}

}  // namespace detail

inline double von_neumann(const Eigen::MatrixXd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho,
                                                    Eigen::EigenvaluesOnly);
  return detail::entropy_bits(es.eigenvalues());
}

inline double von_neumann(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  return detail::entropy_bits(es.eigenvalues());
}

inline double von_neumann(const DensityMatrix& rho) {
  return von_neumann(rho.matrix);
}

// S(i) closed form: (1/(u^2+3)) [(u^2+3) log2(u^2+3) - u^2 log2 u^2].
inline double s_single(double u) {
  const double w = u * u;
  const double s = w + 3.0;
  const double t = (w > 0.0) ? w * std::log2(w) : 0.0;
  return (s * std::log2(s) - t) / s;
}

// Mirror path v = 1/u: spectrum {v^2, v^2, v^2, 1} / (1 + 3v^2).
inline double s_single_inv(double v) {
  const double w = v * v;
  const double s = 1.0 + 3.0 * w;
  const double a = w / s;
  const double b = 1.0 / s;
  const double ta = (a > 0.0) ? 3.0 * a * std::log2(a) : 0.0;
  return -(ta + b * std::log2(b));
}

// Analytic dS(i)/du = -6u log2(u^2) / (u^2+3)^2.
inline double s_single_d1(double u) {
  if (u == 0.0) return 0.0;
  const double s = u * u + 3.0;
  return -6.0 * u * std::log2(u * u) / (s * s);
}

// Analytic second derivative; logarithmically divergent at u = 0.
inline double s_single_d2(double u) {
  const double s = u * u + 3.0;
  const double lg = (u != 0.0) ? std::log2(u * u)
                               : -std::numeric_limits<double>::infinity();
  return -18.0 * (1.0 - u * u) * lg / (s * s * s) -
         12.0 / (s * s * std::log(2.0));
}

inline double s_single_inv_d1(double v, double h = 1e-6) {
  return (s_single_inv(v + h) - s_single_inv(v - h)) / (2.0 * h);
}

inline double s_pair(double u, long long n, int parity = 0) {
  return von_neumann(rho_pair_tdl(u, n, parity));
}

inline double s_pair_inv(double v, long long n, int parity = 0) {
  return von_neumann(rho_pair_tdl_inv(v, n, parity));
}

// Central finite differences for the pair entropy.
inline double s_pair_d1(double u, long long n, double h = 0.0) {
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::abs(u));
  return (s_pair(u + h, n) - s_pair(u - h, n)) / (2.0 * h);
}

inline double s_pair_d2(double u, long long n, double h = 0.0) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, std::abs(u));
  return (s_pair(u + h, n) - 2.0 * s_pair(u, n) + s_pair(u - h, n)) / (h * h);
}

inline double s_single_d2_fd(double u, double h = 0.0) {
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::abs(u));
  return (s_single_d1(u + h) - s_single_d1(u - h)) / (2.0 * h);
}

// xi_E = 1 / (2 ln |(u^2+3)/(u^2-1)|); zero at |u| = 1.
inline double entanglement_length_closed(double u) {
  const double num = u * u + 3.0;
  const double den = std::abs(u * u - 1.0);
  if (den == 0.0) return 0.0;
  return 1.0 / (2.0 * std::log(num / den));
}

inline double entanglement_length_closed_inv(double v) {
  const double num = 1.0 + 3.0 * v * v;
  const double den = std::abs(1.0 - v * v);
  if (den == 0.0) return 0.0;
  return 1.0 / (2.0 * std::log(num / den));
}

struct ELEstimate {
  double u = 0.0;
  double xi_closed = 0.0;
  double xi_fit = 0.0;
  double prefactor = 0.0;  // A_e from the fit intercept
  long long n_min = 0, n_max = 0;
  double residual = 0.0;  // rms residual of the log-linear fit
  bool fit_valid = false;
};

// Exponential fit of S(n) - S(inf) over even separations. S(inf) is the
// product-state value 2 S(i), which removes any cutoff bias.
inline ELEstimate entanglement_length(double u, long long n_cap = 200) {
  ELEstimate est;
  est.u = u;
  est.xi_closed = entanglement_length_closed(u);
  if (std::abs(std::abs(u) - 1.0) < 1e-12) return est;  // S(n) is n-independent
  const double s_inf = 2.0 * s_single(u);
  std::vector<double> ns, logs;
  for (long long n = 2; n <= n_cap; n += 2) {
    const double ds = std::abs(s_pair(u, n) - s_inf);
    // below ~1e-12 the difference is dominated by eigensolver noise
    if (ds < 1e-12) break;
    ns.push_back(static_cast<double>(n));
    logs.push_back(std::log(ds));
  }
  if (ns.size() < 2) return est;
  // least squares on ln|dS| = ln A - n / xi
  const size_t m = ns.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    sx += ns[i];
    sy += logs[i];
    sxx += ns[i] * ns[i];
    sxy += ns[i] * logs[i];
  }
  const double denom = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;
  if (slope >= 0.0) return est;
  est.xi_fit = -1.0 / slope;
  est.prefactor = std::exp(intercept);
  est.n_min = static_cast<long long>(ns.front());
  est.n_max = static_cast<long long>(ns.back());
  double rss = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double r = logs[i] - (intercept + slope * ns[i]);
    rss += r * r;
  }
  est.residual = std::sqrt(rss / m);
  est.fit_valid = true;
  return est;
}

enum class Measure { kSingle, kPair };

struct AverageEntanglement {
  double value = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
  bool averaged = true;  // false when the ground state is unique (u = 0)
};

// Monte-Carlo Haar average of the entanglement of a |phi_s> superposition at
// finite size, via the exact reduced density matrices of the oracle.
inline AverageEntanglement average_entanglement(Measure measure, double u,
                                                int rungs, long long samples,
                                                std::uint64_t seed = 0x5EED,
                                                long long pair_sep = 2) {
  check_oracle_size(rungs);
  if (samples < 1)
    throw std::invalid_argument("average_entanglement: samples < 1");
  const std::vector<int> keep =
      (measure == Measure::kSingle)
          ? std::vector<int>{0}
          : std::vector<int>{0, static_cast<int>(pair_sep)};
  const Eigen::VectorXd psi1 = oracle::ground_state(u, rungs, 0);
  const Eigen::VectorXd psi2 = oracle::ground_state(u, rungs, 1);
  AverageEntanglement out;
  out.samples = samples;
  Eigen::VectorXd phi1, phi2;
  try {
    std::tie(phi1, phi2) = orthogonalize(psi1, psi2);
  } catch (const std::domain_error&) {
    // unique ground state: no superposition freedom to average over
    out.averaged = false;
    out.samples = 1;
    out.value = von_neumann(oracle::partial_trace(psi1, keep, rungs));
    return out;
  }
  const Eigen::MatrixXd r11 = oracle::partial_trace(phi1, keep, rungs);
  const Eigen::MatrixXd r22 = oracle::partial_trace(phi2, keep, rungs);
  const Eigen::MatrixXd r12 = oracle::partial_trace_cross(phi1, phi2, keep, rungs);
  std::mt19937_64 rng(seed);
  double sum = 0.0, comp = 0.0, sumsq = 0.0, compsq = 0.0;
  for (long long k = 0; k < samples; ++k) {
    const auto [a, b] = oracle::detail::haar_pair(rng);
    const std::complex<double> ab = a * std::conj(b);
    Eigen::MatrixXcd rho =
        std::norm(a) * r11.cast<std::complex<double>>() +
        std::norm(b) * r22.cast<std::complex<double>>() +
        ab * r12.cast<std::complex<double>>() +
        std::conj(ab) * r12.transpose().cast<std::complex<double>>();
    const double e = std::abs(von_neumann(Eigen::MatrixXcd(rho)));
    oracle::detail::kahan_add(e, sum, comp);
    oracle::detail::kahan_add(e * e, sumsq, compsq);
  }
  out.value = sum / samples;
  const double var = std::max(0.0, sumsq / samples - out.value * out.value);
  out.stderr_ = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
  return out;
}

}  // namespace ladder
