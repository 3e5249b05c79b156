// Overflow-safe numerics for ratios of 2N-th powers.
//
// Quantities like (u^2+3)^(2N) + 3(u^2-1)^(2N) appear with N up to 1e7.
// They are always consumed as ratios or logarithms, so sums of powers are
// kept in log-magnitude form: the dominant base is factored out and only
// ratios of magnitude <= 1 are raised to high powers.

#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ladder::num {

// value = sign * exp(log_abs); sign == 0 encodes an exact zero.
struct LogScalar {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

// sum_i c_i * b_i^e for even non-negative exponent e.
inline LogScalar pow_sum(std::initializer_list<std::pair<double, double>> terms,
                         long long exponent) {
  if (exponent < 0 || exponent % 2 != 0)
    throw std::invalid_argument("pow_sum: exponent must be even and >= 0");
  double big = 0.0;
  for (const auto& [c, b] : terms) {
    (void)c;
    big = std::max(big, std::abs(b));
  }
  if (big == 0.0) {
    double m = 0.0;
    if (exponent == 0)
      for (const auto& [c, b] : terms) m += c;
    LogScalar r;
    if (m != 0.0) {
      r.log_abs = std::log(std::abs(m));
      r.sign = m > 0 ? 1 : -1;
    }
    return r;
  }
  // e even: b^e == |b/big|^e * big^e with |b/big| <= 1.
  double mantissa = 0.0;
  for (const auto& [c, b] : terms)
    mantissa += c * std::pow(std::abs(b / big), static_cast<double>(exponent));
  LogScalar r;
  if (mantissa != 0.0) {
    r.log_abs = exponent * std::log(big) + std::log(std::abs(mantissa));
    r.sign = mantissa > 0 ? 1 : -1;
  }
  return r;
}

// exp(a.log_abs - b.log_abs) with signs, for ratios of pow_sum results.
inline double log_ratio(const LogScalar& numer, const LogScalar& denom) {
  if (denom.sign == 0) throw std::domain_error("log_ratio: zero denominator");
  if (numer.sign == 0) return -std::numeric_limits<double>::infinity();
  return numer.log_abs - denom.log_abs;
}

inline double ratio(const LogScalar& numer, const LogScalar& denom) {
  if (denom.sign == 0) throw std::domain_error("ratio: zero denominator");
  if (numer.sign == 0) return 0.0;
  return numer.sign * denom.sign * std::exp(numer.log_abs - denom.log_abs);
}

}  // namespace ladder::num
