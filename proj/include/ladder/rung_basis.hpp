// Single-rung Hilbert space of the two-leg ladder: two spin-1/2 sites per
// rung, singlet/triplet basis, spin operators per leg and the positive-energy
// two-rung multiplets that define the local projector Hamiltonian.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ladder {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Vec16 = Eigen::Matrix<double, 16, 1>;
using Mat16 = Eigen::Matrix<double, 16, 16>;
using CMat4 = Eigen::Matrix4cd;
using CMat16 = Eigen::Matrix<std::complex<double>, 16, 16>;

// Fixed basis order everywhere: |t+>, |t0>, |t->, |s>.
enum RungBasis : int { kTPlus = 0, kTZero = 1, kTMinus = 2, kSinglet = 3 };

struct RungOperator {
  Mat4 matrix;
  std::string label;
};

inline Vec4 rung_state(std::string_view label) {
  Vec4 v = Vec4::Zero();
  if (label == "t+")
    v[kTPlus] = 1.0;
  else if (label == "t0")
    v[kTZero] = 1.0;
  else if (label == "t-")
    v[kTMinus] = 1.0;
  else if (label == "s")
    v[kSinglet] = 1.0;
  else
    throw std::invalid_argument("rung_state: unknown label '" +
                                std::string(label) + "'");
  return v;
}

namespace detail {

// Columns: singlet/triplet states in the product basis (uu, ud, du, dd),
// leg 1 is the first tensor factor.
inline Mat4 product_to_st() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat4 U = Mat4::Zero();
  U(0, kTPlus) = 1.0;
  U(1, kTZero) = r;
  U(2, kTZero) = r;
  U(3, kTMinus) = 1.0;
  U(1, kSinglet) = r;
  U(2, kSinglet) = -r;
  return U;
}

inline Eigen::Matrix2cd pauli(char axis) {
  using std::complex;
  Eigen::Matrix2cd s;
  switch (axis) {
    case 'x':
      s << 0, 1, 1, 0;
      break;
    case 'y':
      s << complex<double>(0, 0), complex<double>(0, -1),
          complex<double>(0, 1), complex<double>(0, 0);
      break;
    case 'z':
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("spin_operator: axis must be x, y or z");
  }
  return s;
}

}  // namespace detail

// Spin-1/2 operator on one leg of a rung, in the singlet/triplet basis.
// S^x and S^z are real in this basis; S^y is purely imaginary.
inline CMat4 spin_operator_c(int leg, char axis) {
  if (leg != 1 && leg != 2)
    throw std::invalid_argument("spin_operator: leg must be 1 or 2");
  const Eigen::Matrix2cd s = 0.5 * detail::pauli(axis);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd prod = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd& a = (leg == 1) ? s : id;
  const Eigen::Matrix2cd& b = (leg == 1) ? id : s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      prod.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  const Mat4 U = detail::product_to_st();
  return U.transpose().cast<std::complex<double>>() * prod *
         U.cast<std::complex<double>>();
}

inline RungOperator spin_operator(int leg, char axis) {
  const CMat4 m = spin_operator_c(leg, axis);
  if (m.imag().cwiseAbs().maxCoeff() > 1e-14)
    throw std::domain_error("spin_operator: requested component is not real");
  return {m.real(), std::string("S^") + axis + " leg " + std::to_string(leg)};
}

// S_1 . S_2 on a single rung.
inline Mat4 rung_exchange() {
  CMat4 m = CMat4::Zero();
  for (char ax : {'x', 'y', 'z'})
    m += spin_operator_c(1, ax) * spin_operator_c(2, ax);
  return m.real();
}

// Tensor products; the left factor is the lower rung index.
template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = decltype(typename A::Scalar{} * typename B::Scalar{});
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vec16 kron4(const Vec4& a, const Vec4& b) {
  Vec16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = a[i] * b[j];
  return out;
}

inline Mat16 kron44(const Mat4& a, const Mat4& b) {
  Mat16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

// triplet (x) triplet -> total J combinations, Condon-Shortley phases.
inline Vec16 clebsch_tt(int J, int M) {
  auto tt = [](int a, int b) { return kron4(Vec4::Unit(a), Vec4::Unit(b)); };
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  if (J == 2) {
    switch (M) {
      case 2:
        return tt(kTPlus, kTPlus);
      case 1:
        return r2 * (tt(kTPlus, kTZero) + tt(kTZero, kTPlus));
      case 0:
        return r6 * (tt(kTPlus, kTMinus) + 2.0 * tt(kTZero, kTZero) +
                     tt(kTMinus, kTPlus));
      case -1:
        return r2 * (tt(kTZero, kTMinus) + tt(kTMinus, kTZero));
      case -2:
        return tt(kTMinus, kTMinus);
    }
  } else if (J == 1) {
    switch (M) {
      case 1:
        return r2 * (tt(kTPlus, kTZero) - tt(kTZero, kTPlus));
      case 0:
        return r2 * (tt(kTPlus, kTMinus) - tt(kTMinus, kTPlus));
      case -1:
        return r2 * (tt(kTZero, kTMinus) - tt(kTMinus, kTZero));
    }
  } else if (J == 0 && M == 0) {
    return r3 * (tt(kTPlus, kTMinus) - tt(kTZero, kTZero) +
                 tt(kTMinus, kTPlus));
  }
  throw std::invalid_argument("clebsch_tt: invalid (J, M)");
}

// Positive-energy multiplet |psi_JM> of the two-rung plaquette for the
// one-parameter family (second g-parameter fixed to -u, so the J=1 singlet-
// triplet mixing vanishes).
inline Vec16 two_rung_multiplet(double u, int J, int M) {
  const Vec4 s = Vec4::Unit(kSinglet);
  const double uu = -u * u;  // u * (-u)
  if (J == 0 && M == 0) {
    Vec16 v = std::sqrt(3.0) * kron4(s, s) + uu * clebsch_tt(0, 0);
    return v / std::sqrt(3.0 + uu * uu);
  }
  if (J == 1 && (M == 1 || M == 0 || M == -1)) {
    const Vec4 t = Vec4::Unit(1 - M);  // t+, t0, t- at indices 0, 1, 2
    return (kron4(s, t) + kron4(t, s)) / std::sqrt(2.0);
  }
  if (J == 2 && M >= -2 && M <= 2) return clebsch_tt(2, M);
  throw std::invalid_argument("two_rung_multiplet: invalid (J, M)");
}

}  // namespace ladder
