#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace epsim {

/// Plain 3-vector. Doubles as an element of the Lie algebra so(3) under the
/// hat isomorphism, and as body/spatial positions and velocities.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double xx, double yy, double zz) : x(xx), y(yy), z(zz) {}

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double squared_norm(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec3& a) {
  return std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(a.z)});
}

inline constexpr Vec3 e_x() { return {1.0, 0.0, 0.0}; }
inline constexpr Vec3 e_y() { return {0.0, 1.0, 0.0}; }
inline constexpr Vec3 e_z() { return {0.0, 0.0, 1.0}; }

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<size_t>(3 * i + j)]; }
  double operator()(int i, int j) const {
    return a[static_cast<size_t>(3 * i + j)];
  }

  static Mat3 zero() { return {}; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  static Mat3 diagonal(double d0, double d1, double d2) {
    Mat3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
  }

  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    return {{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }

  Mat3 transpose() const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  double trace() const { return a[0] + a[4] + a[8]; }

  bool is_finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) a[static_cast<size_t>(i)] += o.a[static_cast<size_t>(i)];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) a[static_cast<size_t>(i)] -= o.a[static_cast<size_t>(i)];
    return *this;
  }
  Mat3& operator*=(double s) {
    for (double& v : a) v *= s;
    return *this;
  }
};

inline Mat3 operator+(Mat3 m, const Mat3& o) { return m += o; }
inline Mat3 operator-(Mat3 m, const Mat3& o) { return m -= o; }
inline Mat3 operator*(double s, Mat3 m) { return m *= s; }
inline Mat3 operator*(Mat3 m, double s) { return m *= s; }
inline Mat3 operator-(const Mat3& m) { return -1.0 * m; }

inline Mat3 operator*(const Mat3& l, const Mat3& r) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j) + l(i, 2) * r(2, j);
  return m;
}

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
          m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
          m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

/// u v^T
inline Mat3 outer(const Vec3& u, const Vec3& v) {
  return Mat3::from_rows(u.x * v, u.y * v, u.z * v);
}

inline double frobenius_norm(const Mat3& m) {
  double s = 0.0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}

inline double max_abs(const Mat3& m) {
  double s = 0.0;
  for (double v : m.a) s = std::max(s, std::fabs(v));
  return s;
}

inline double determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Inverse by adjugate. Throws std::domain_error on a numerically singular
/// matrix; meant for well-conditioned constant matrices (mass, inertia).
inline Mat3 inverse(const Mat3& m) {
  const double det = determinant(m);
  if (!(std::fabs(det) > 1e-300))
    throw std::domain_error("Mat3 inverse: singular matrix");
  const double s = 1.0 / det;
  Mat3 r;
  r(0, 0) = s * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  r(0, 1) = s * (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2));
  r(0, 2) = s * (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1));
  r(1, 0) = s * (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2));
  r(1, 1) = s * (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0));
  r(1, 2) = s * (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2));
  r(2, 0) = s * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  r(2, 1) = s * (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1));
  r(2, 2) = s * (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  return r;
}

inline double asymmetry(const Mat3& m) { return max_abs(m - m.transpose()); }

}  // namespace epsim
