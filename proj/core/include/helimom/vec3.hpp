#pragma once

#include <cmath>
#include <complex>

namespace helimom {

using Complex = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct CVec3 {
  Complex x{}, y{}, z{};

  CVec3() = default;
  CVec3(Complex cx, Complex cy, Complex cz) : x(cx), y(cy), z(cz) {}
  explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

  Complex operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Complex& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  CVec3 operator-() const { return {-x, -y, -z}; }
  CVec3 operator*(Complex s) const { return {x * s, y * s, z * s}; }
  CVec3 operator/(Complex s) const { return {x / s, y / s, z / s}; }
  CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline CVec3 operator*(Complex s, const CVec3& v) { return v * s; }
inline CVec3 operator*(double s, const CVec3& v) { return v * Complex(s); }

inline CVec3 conj(const CVec3& v) { return {std::conj(v.x), std::conj(v.y), std::conj(v.z)}; }

// Hermitian inner product, antilinear in the first argument: <a|b> = sum conj(a_i) b_i.
inline Complex cdot(const CVec3& a, const CVec3& b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}
inline double norm2(const CVec3& v) { return std::real(cdot(v, v)); }
inline double norm(const CVec3& v) { return std::sqrt(norm2(v)); }

inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Vec3 real(const CVec3& v) { return {v.x.real(), v.y.real(), v.z.real()}; }
inline Vec3 imag(const CVec3& v) { return {v.x.imag(), v.y.imag(), v.z.imag()}; }

// Dense complex 3x3, row-major. Enough matrix algebra for the spin matrices.
struct Mat3c {
  Complex m[3][3] = {};

  CVec3 operator*(const CVec3& v) const {
    CVec3 r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
  }
  Mat3c operator+(const Mat3c& o) const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  Mat3c operator-(const Mat3c& o) const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }
  Mat3c operator*(Complex s) const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
    return r;
  }
  Mat3c operator*(const Mat3c& o) const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }
};

inline Mat3c adjoint(const Mat3c& a) {
  Mat3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = std::conj(a.m[j][i]);
  return r;
}

inline double max_abs(const Mat3c& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a.m[i][j]));
  return r;
}

}  // namespace helimom
