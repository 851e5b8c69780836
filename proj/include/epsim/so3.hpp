#pragma once

#include "epsim/linalg.hpp"

namespace epsim {

/// Element of so(3). Only the three independent entries are stored, so the
/// matrix is skew-symmetric by construction; from_matrix() validates and
/// projects general input.
class SkewMat {
 public:
  SkewMat() = default;

  static SkewMat from_vector(const Vec3& w) { return SkewMat(w); }

  /// Accepts a matrix that is skew-symmetric up to `tol` (max-entry norm of
  /// A + A^T); throws std::invalid_argument otherwise.
  static SkewMat from_matrix(const Mat3& m, double tol = 1e-12);

  /// The inverse of the hat map.
  const Vec3& axis() const { return w_; }

  Mat3 matrix() const {
    return Mat3::from_rows({0.0, -w_.z, w_.y}, {w_.z, 0.0, -w_.x},
                           {-w_.y, w_.x, 0.0});
  }

  SkewMat operator-() const { return SkewMat(-w_); }

 private:
  explicit SkewMat(const Vec3& w) : w_(w) {}
  Vec3 w_;
};

/// omega -> omega^x, the Lie algebra isomorphism (R^3, x) -> (so(3), [.,.]).
inline SkewMat hat(const Vec3& w) { return SkewMat::from_vector(w); }

inline Vec3 vee(const SkewMat& m) { return m.axis(); }

/// vee of a general matrix; rejects input that is not skew to `tol`.
inline Vec3 vee(const Mat3& m, double tol = 1e-12) {
  return SkewMat::from_matrix(m, tol).axis();
}

/// Pairing on so(3) and its dual: <A, B> = tr(A^T B) / 2, so that
/// pairing(hat(u), hat(v)) = dot(u, v).
double pairing(const Mat3& a, const Mat3& b);
inline double pairing(const SkewMat& a, const SkewMat& b) {
  return pairing(a.matrix(), b.matrix());
}

/// Diamond operator on R^3 x R^3: u <> v = (u x v)^x.
inline SkewMat diamond(const Vec3& u, const Vec3& v) {
  return hat(cross(u, v));
}

/// Attitude matrix. Orthogonality is maintained by construction of the
/// integration schemes and monitored by diagnostics; the constructor does not
/// renormalize.
class RotationMatrix {
 public:
  RotationMatrix() : m_(Mat3::identity()) {}
  explicit RotationMatrix(const Mat3& m) : m_(m) {}

  static RotationMatrix identity() { return RotationMatrix(); }

  const Mat3& matrix() const { return m_; }

  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Vec3 transpose_apply(const Vec3& v) const {
    return {m_(0, 0) * v.x + m_(1, 0) * v.y + m_(2, 0) * v.z,
            m_(0, 1) * v.x + m_(1, 1) * v.y + m_(2, 1) * v.z,
            m_(0, 2) * v.x + m_(1, 2) * v.y + m_(2, 2) * v.z};
  }

  RotationMatrix operator*(const RotationMatrix& o) const {
    return RotationMatrix(m_ * o.m_);
  }

  RotationMatrix transpose() const { return RotationMatrix(m_.transpose()); }

  /// ||R^T R - I||_F
  double orthogonality_error() const {
    return frobenius_norm(m_.transpose() * m_ - Mat3::identity());
  }

 private:
  Mat3 m_;
};

/// Rodrigues formula: exp(w^x) = I + sin|w|/|w| w^x + (1-cos|w|)/|w|^2 (w^x)^2.
/// Below |w| = 1e-4 the coefficients switch to their series to avoid 0/0.
RotationMatrix rodrigues_exp(const Vec3& w);

/// Modified inertia tensor J^ = tr(J)/2 I - J. Requires symmetric J
/// (validated to 1e-12); with it, (J w)^x = w^x J^ + J^ w^x.
Mat3 modified_inertia(const Mat3& J);

}  // namespace epsim
