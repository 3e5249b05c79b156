// Haar-averaged ground-state fidelity between two parameter values, its
// asymptotic decay rate, the curvature D(u), the fidelity susceptibility and
// scaling-collapse datasets. Everything exists in a u-parametrized and a
// mirrored 1/u-parametrized form so both critical points are reachable
// without overflow; N counts rung pairs (2N rungs).

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ladder/numerics.hpp"

namespace ladder {

struct FidelityPoint {
  double u1 = 0.0, u2 = 0.0;
  long long N = 0;
  double value = 0.0;      // underflows to 0 for very large N
  double log_value = 0.0;  // ln of the fidelity, always finite here
};

namespace detail {

struct FidelityIngredients {
  double log_n1, log_n2;  // ln N0(u1), ln N0(u2)
  double log_a, log_b;    // ln <psi1|psi1'>, ln <psi1|psi2'> (unnormalized)
  double p1, p2;          // self overlaps p(u1), p(u2)
};

inline double p_from(const num::LogScalar& numer,
                     const num::LogScalar& denom) {
  return std::min(1.0, num::ratio(numer, denom));
}

inline FidelityIngredients ingredients_u(double u1, double u2, long long N) {
  const double a1 = u1 * u1, a2 = u2 * u2, x = u1 * u2;
  FidelityIngredients ing;
  const auto n1 = num::pow_sum({{1.0, a1 + 3.0}, {3.0, a1 - 1.0}}, 2 * N);
  const auto n2 = num::pow_sum({{1.0, a2 + 3.0}, {3.0, a2 - 1.0}}, 2 * N);
  ing.log_n1 = n1.log_abs;
  ing.log_n2 = n2.log_abs;
  ing.log_a = num::pow_sum({{1.0, x + 3.0}, {3.0, x - 1.0}}, 2 * N).log_abs;
  ing.log_b = num::pow_sum({{1.0, x - 3.0}, {3.0, x + 1.0}}, 2 * N).log_abs;
  ing.p1 = p_from(num::pow_sum({{3.0, a1 + 1.0}, {1.0, a1 - 3.0}}, 2 * N), n1);
  ing.p2 = p_from(num::pow_sum({{3.0, a2 + 1.0}, {1.0, a2 - 3.0}}, 2 * N), n2);
  return ing;
}

// Same quantities as functions of v = 1/u; the overall u^(4N) scale cancels
// between numerators and norms, so nothing blows up as v -> 0.
inline FidelityIngredients ingredients_inv(double v1, double v2, long long N) {
  const double a1 = v1 * v1, a2 = v2 * v2, x = v1 * v2;
  FidelityIngredients ing;
  const auto n1 = num::pow_sum({{1.0, 1.0 + 3.0 * a1}, {3.0, 1.0 - a1}}, 2 * N);
  const auto n2 = num::pow_sum({{1.0, 1.0 + 3.0 * a2}, {3.0, 1.0 - a2}}, 2 * N);
  ing.log_n1 = n1.log_abs;
  ing.log_n2 = n2.log_abs;
  ing.log_a =
      num::pow_sum({{1.0, 1.0 + 3.0 * x}, {3.0, 1.0 - x}}, 2 * N).log_abs;
  ing.log_b =
      num::pow_sum({{1.0, 1.0 - 3.0 * x}, {3.0, 1.0 + x}}, 2 * N).log_abs;
  ing.p1 = p_from(
      num::pow_sum({{3.0, 1.0 + a1}, {1.0, 1.0 - 3.0 * a1}}, 2 * N), n1);
  ing.p2 = p_from(
      num::pow_sum({{3.0, 1.0 + a2}, {1.0, 1.0 - 3.0 * a2}}, 2 * N), n2);
  return ing;
}

// ln of the Haar-averaged overlap
//   F = (1/2) [ g11 + (g11 (1 + p1 p2) - g12 (p1 + p2)) /
//               sqrt((1 - p1^2)(1 - p2^2)) ]
// with g11 = A / sqrt(N1 N2) and g12 = B / sqrt(N1 N2); the average over
// shared (a, b) of the Gram-Schmidt pair overlaps.
inline double log_fidelity(const FidelityIngredients& ing) {
  const double w = std::sqrt((1.0 - ing.p1 * ing.p1) *
                             (1.0 - ing.p2 * ing.p2));
  if (w == 0.0)
    throw std::domain_error(
        "fidelity: degenerate overlap (p = 1); the two ground states merge");
  const double log_g11 = ing.log_a - 0.5 * (ing.log_n1 + ing.log_n2);
  const double ratio_ba = std::exp(ing.log_b - ing.log_a);
  const double x = 1.0 + (1.0 + ing.p1 * ing.p2) / w;
  const double y = (ing.p1 + ing.p2) / w;
  const double bracket = 0.5 * (x - ratio_ba * y);
  if (!(bracket > 0.0))
    throw std::domain_error("fidelity: non-positive averaged overlap");
  return log_g11 + std::log(bracket);
}

}  // namespace detail

inline double log_fidelity_u(double u1, double u2, long long N) {
  return detail::log_fidelity(detail::ingredients_u(u1, u2, N));
}

inline double log_fidelity_inv(double v1, double v2, long long N) {
  return detail::log_fidelity(detail::ingredients_inv(v1, v2, N));
}

inline FidelityPoint fidelity_closed(double u1, double u2, long long N) {
  if (N < 1) throw std::invalid_argument("fidelity: N must be >= 1");
  FidelityPoint pt;
  pt.u1 = u1;
  pt.u2 = u2;
  pt.N = N;
  pt.log_value = log_fidelity_u(u1, u2, N);
  pt.value = std::exp(pt.log_value);
  return pt;
}

inline FidelityPoint fidelity_closed_tilde(double v1, double v2, long long N) {
  if (N < 1) throw std::invalid_argument("fidelity: N must be >= 1");
  FidelityPoint pt;
  pt.u1 = v1;
  pt.u2 = v2;
  pt.N = N;
  pt.log_value = log_fidelity_inv(v1, v2, N);
  pt.value = std::exp(pt.log_value);
  return pt;
}

// Large-N decay rate: F ~ alpha^N.
inline double alpha_asymptotic(double u1, double u2) {
  const double x = u1 * u2;
  return (x * x + 6.0 * x + 9.0) /
         (x * x + 3.0 * (u1 * u1 + u2 * u2) + 9.0);
}

inline double alpha_asymptotic_tilde(double v1, double v2) {
  const double x = v1 * v2;
  return (9.0 * x * x + 6.0 * x + 1.0) /
         (9.0 * x * x + 3.0 * (v1 * v1 + v2 * v2) + 1.0);
}

namespace detail {

inline double adjust_step(double u, double h) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, std::abs(u));
  // the formulas are singular at u = 0; keep the stencil on one side
  if (u != 0.0 && std::abs(u) <= h) h = std::abs(u) / 2.0;
  return h;
}

template <typename LogF>
double mixed_partial(LogF&& f, double u, double h) {
  return (f(u + h, u + h) - f(u + h, u - h) - f(u - h, u + h) +
          f(u - h, u - h)) /
         (4.0 * h * h);
}

}  // namespace detail

struct Curvature {
  double d_unnormalized = 0.0;  // on F = sqrt(N0 N0') * fidelity
  double d_normalized = 0.0;    // on the normalized fidelity
};

// D(u) = -d^2/du1 du2 ln F(u1,u2) at u1 = u2 = u, four-point stencil.
// The norm contribution is additively separable, so the two variants agree
// up to finite-difference noise; both are reported.
inline Curvature d_of_u(double u, long long N, double h = 0.0) {
  if (u == 0.0)
    throw std::invalid_argument("d_of_u: u = 0 is a degenerate point");
  h = detail::adjust_step(u, h);
  auto log_f = [N](double a, double b) { return log_fidelity_u(a, b, N); };
  auto log_big_f = [N](double a, double b) {
    const auto ing = detail::ingredients_u(a, b, N);
    return detail::log_fidelity(ing) + 0.5 * (ing.log_n1 + ing.log_n2);
  };
  Curvature c;
  c.d_normalized = -detail::mixed_partial(log_f, u, h);
  c.d_unnormalized = -detail::mixed_partial(log_big_f, u, h);
  return c;
}

inline Curvature d_tilde(double v, long long N, double h = 0.0) {
  if (v == 0.0)
    throw std::invalid_argument("d_tilde: v = 0 is a degenerate point");
  h = detail::adjust_step(v, h);
  auto log_f = [N](double a, double b) { return log_fidelity_inv(a, b, N); };
  auto log_big_f = [N](double a, double b) {
    const auto ing = detail::ingredients_inv(a, b, N);
    return detail::log_fidelity(ing) + 0.5 * (ing.log_n1 + ing.log_n2);
  };
  Curvature c;
  c.d_normalized = -detail::mixed_partial(log_f, v, h);
  c.d_unnormalized = -detail::mixed_partial(log_big_f, v, h);
  return c;
}

// chi_F(u) = lim_{d->0} -2 ln F(u, u+d) / d^2, symmetrized in the step sign
// and Richardson-extrapolated over (delta, delta/2).
inline double chi_f(double u, long long N, double delta = 1e-3) {
  if (delta <= 0.0) throw std::invalid_argument("chi_f: delta must be > 0");
  auto estimate = [&](double d) {
    const double lp = log_fidelity_u(u, u + d, N);
    const double lm = log_fidelity_u(u, u - d, N);
    return -(lp + lm) / (d * d);
  };
  const double c1 = estimate(delta);
  const double c2 = estimate(delta / 2.0);
  return (4.0 * c2 - c1) / 3.0;
}

struct CollapseRow {
  long long N = 0;
  double v = 0.0;        // tilde parameter 1/u
  double d_over_n = 0.0; // |D'(v)| / N
  double scaling_x = 0.0;  // N v^2
};

struct CollapseDataset {
  std::vector<CollapseRow> rows;
  double score = 0.0;    // max relative spread within equal-N v^2 groups
  double nu_fit = 0.0;   // spread-minimizing exponent
};

// Rows share exact N v^2 values across system sizes: v = sqrt(x / N).
inline CollapseDataset collapse_dataset(
    const std::vector<long long>& n_list, const std::vector<double>& x_grid) {
  CollapseDataset ds;
  for (double x : x_grid) {
    double lo = 1e300, hi = -1e300, sum = 0.0;
    int count = 0;
    for (long long n : n_list) {
      CollapseRow row;
      row.N = n;
      row.v = std::sqrt(x / static_cast<double>(n));
      row.scaling_x = x;
      row.d_over_n =
          std::abs(d_tilde(row.v, n).d_unnormalized) / static_cast<double>(n);
      ds.rows.push_back(row);
      lo = std::min(lo, row.d_over_n);
      hi = std::max(hi, row.d_over_n);
      sum += row.d_over_n;
      ++count;
    }
    if (count > 1 && sum > 0.0)
      ds.score = std::max(ds.score, (hi - lo) / (sum / count));
  }
  return ds;
}

// Exponent estimate: scan nu, rescale x = N v^nu and measure how far the
// smaller-N curves deviate from the largest-N curve (log-log interpolation).
inline double fit_collapse_exponent(const std::vector<long long>& n_list,
                                    int points_per_curve = 25,
                                    double nu_lo = 1.5, double nu_hi = 2.5,
                                    double nu_step = 0.01, double x_lo = 0.01,
                                    double x_hi = 1.0) {
  if (n_list.size() < 2)
    throw std::invalid_argument("fit_collapse_exponent: need >= 2 sizes");
  const long long n_ref = *std::max_element(n_list.begin(), n_list.end());
  struct Curve {
    std::vector<double> log_v, log_y;
  };
  std::vector<std::pair<long long, Curve>> curves;
  for (long long n : n_list) {
    Curve c;
    // stay inside the critical window N v^2 in [x_lo, x_hi], where the
    // rescaled curvature is a pure function of the scaling variable
    const double v_lo = std::sqrt(x_lo / static_cast<double>(n));
    const double v_hi = std::sqrt(x_hi / static_cast<double>(n));
    for (int i = 0; i < points_per_curve; ++i) {
      const double t = static_cast<double>(i) / (points_per_curve - 1);
      const double v = v_lo * std::pow(v_hi / v_lo, t);
      const double y =
          std::abs(d_tilde(v, n).d_unnormalized) / static_cast<double>(n);
      c.log_v.push_back(std::log(v));
      c.log_y.push_back(std::log(y));
    }
    curves.emplace_back(n, std::move(c));
  }
  const Curve* ref = nullptr;
  for (const auto& [n, c] : curves)
    if (n == n_ref) ref = &c;
  auto interp_ref = [&](double log_x, double log_n_ref_v, double nu) {
    // reference curve sampled at log_x = nu log v + log N
    (void)log_n_ref_v;
    const double lv = (log_x - std::log(static_cast<double>(n_ref))) / nu;
    const auto& xs = ref->log_v;
    if (lv <= xs.front() || lv >= xs.back()) return std::nan("");
    const auto it = std::upper_bound(xs.begin(), xs.end(), lv);
    const size_t j = static_cast<size_t>(it - xs.begin());
    const double t = (lv - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ref->log_y[j - 1] + t * (ref->log_y[j] - ref->log_y[j - 1]);
  };
  double best_nu = nu_lo, best_cost = 1e300;
  for (double nu = nu_lo; nu <= nu_hi + 1e-12; nu += nu_step) {
    double cost = 0.0;
    long long used = 0;
    for (const auto& [n, c] : curves) {
      if (n == n_ref) continue;
      for (size_t i = 0; i < c.log_v.size(); ++i) {
        const double log_x =
            nu * c.log_v[i] + std::log(static_cast<double>(n));
        const double y_ref = interp_ref(log_x, 0.0, nu);
        if (std::isnan(y_ref)) continue;
        const double r = c.log_y[i] - y_ref;
        cost += r * r;
        ++used;
      }
    }
    if (used > 0) cost /= static_cast<double>(used);
    if (used > 0 && cost < best_cost) {
      best_cost = cost;
      best_nu = nu;
    }
  }
  return best_nu;
}

}  // namespace ladder
