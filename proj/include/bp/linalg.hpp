#pragma once

#include <Eigen/Dense>
#include <complex>

#include "bp/errors.hpp"

namespace bp {

using cx = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

/// Global tolerances. Identity/residual checks use `identity`, scaled by the
/// largest operand magnitude; denominator and degeneracy cutoffs use `denom`.
struct Tol {
  static constexpr double identity = 1e-9;
  static constexpr double denom = 1e-12;
  static constexpr double parabolic = 1e-6;
  static constexpr double solver = 1e-10;
};

/// det(u|v) of the 2x2 matrix with columns u, v.
inline cx det2(const Vec2& u, const Vec2& v) { return u(0) * v(1) - u(1) * v(0); }

inline Mat2 mat2(cx a, cx b, cx c, cx d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

inline cx mat_det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Mat2 mat_inv(const Mat2& m) {
  cx d = mat_det(m);
  if (std::abs(d) < Tol::denom * (1.0 + m.cwiseAbs().maxCoeff()))
    throw SingularMatrix("2x2 inverse of a (near-)singular matrix");
  return mat2(m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d);
}

inline Mat2 mat_pow(const Mat2& m, int e) {
  Mat2 base = e >= 0 ? m : mat_inv(m);
  int k = e >= 0 ? e : -e;
  Mat2 r = Mat2::Identity();
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

inline double mat_dist(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// The -1-eigenvector of a parabolic matrix with trace -2 (kernel of m + Id).
/// Unique up to scale as long as m != -Id.
inline Vec2 parabolic_fixed_vector(const Mat2& m) {
  Mat2 a = m + Mat2::Identity();
  if (a.cwiseAbs().maxCoeff() < Tol::denom)
    throw DegenerateInput("parabolic_fixed_vector: matrix is -Id");
  Vec2 r0(a(0, 0), a(0, 1)), r1(a(1, 0), a(1, 1));
  Vec2 r = (r0.cwiseAbs().sum() >= r1.cwiseAbs().sum()) ? r0 : r1;
  return Vec2(-r(1), r(0));
}

/// Bloch-Wigner dilogarithm D(z) = Im(Li2(z)) + arg(1-z) log|z|.
/// Accurate to ~1e-15 away from the singular points 0 and 1.
double bloch_wigner(const cx& z);

/// Complex dilogarithm Li2 (principal branch), by inversion/reflection plus
/// the Bernoulli series in -log(1-z).
cx dilog(const cx& z);

}  // namespace bp
