#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

/// \file
/// \brief Minimal 3D rigid-body algebra: Vec3, Mat3, HomTransform.
///
/// Hand-rolled rather than pulled from a linear-algebra package on purpose:
/// every product is a fixed left-to-right sum, so results are reproducible
/// bit for bit across runs and against straightforward 4x4 reference
/// implementations.  The kinematic chains in this project are at most a
/// handful of factors deep, so there is nothing to gain from a heavier
/// dependency.

namespace oriloco {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Row-major 3x3 matrix.  Defaults to identity.
struct Mat3 {
  std::array<double, 9> m{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }

  static Mat3 identity() { return {}; }

  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  double det() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }

  Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

/// Largest absolute entry of R^T R - I; zero for a perfectly orthonormal R.
inline double orthogonality_error(const Mat3& r) {
  const Mat3 g = r.transposed() * r;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g(i, j) - target));
    }
  return worst;
}

/// Rigid transform (member of SE(3)): rotation block plus translation.
///
/// Construction validates rigidity -- the rotation must be orthonormal with
/// determinant +1, both to within 1e-12 -- so a HomTransform that exists is
/// always safe to compose, invert, or apply.
class HomTransform {
 public:
  HomTransform() = default;

  HomTransform(const Mat3& rotation, const Vec3& translation)
      : r_(rotation), t_(translation) {
    if (orthogonality_error(r_) > kRigidTol || std::abs(r_.det() - 1.0) > kRigidTol)
      throw std::invalid_argument("HomTransform: rotation block is not a proper rotation");
  }

  const Mat3& rotation() const { return r_; }
  const Vec3& translation() const { return t_; }

  /// Map a point through this transform: R p + t.
  Vec3 apply(const Vec3& p) const {
    return {r_(0, 0) * p.x + r_(0, 1) * p.y + r_(0, 2) * p.z + t_.x,
            r_(1, 0) * p.x + r_(1, 1) * p.y + r_(1, 2) * p.z + t_.y,
            r_(2, 0) * p.x + r_(2, 1) * p.y + r_(2, 2) * p.z + t_.z};
  }

  /// Rotate a direction (ignores translation).
  Vec3 rotate(const Vec3& v) const { return r_ * v; }

  HomTransform inverse() const {
    const Mat3 rt = r_.transposed();
    const Vec3 back = rt * t_;
    return {rt, {-back.x, -back.y, -back.z}};
  }

  /// Row-major 4x4 matrix with (0 0 0 1) bottom row.
  std::array<double, 16> matrix() const {
    return {r_(0, 0), r_(0, 1), r_(0, 2), t_.x,  //
            r_(1, 0), r_(1, 1), r_(1, 2), t_.y,  //
            r_(2, 0), r_(2, 1), r_(2, 2), t_.z,  //
            0.0,      0.0,      0.0,      1.0};
  }

  static HomTransform identity() { return {}; }

  static HomTransform from_translation(const Vec3& t) { return {Mat3::identity(), t}; }

  static HomTransform rot_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r(0, 0) = 1.0; r(0, 1) = 0.0; r(0, 2) = 0.0;
    r(1, 0) = 0.0; r(1, 1) = c;   r(1, 2) = -s;
    r(2, 0) = 0.0; r(2, 1) = s;   r(2, 2) = c;
    return {r, {}};
  }

  static HomTransform rot_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r(0, 0) = c;   r(0, 1) = 0.0; r(0, 2) = s;
    r(1, 0) = 0.0; r(1, 1) = 1.0; r(1, 2) = 0.0;
    r(2, 0) = -s;  r(2, 1) = 0.0; r(2, 2) = c;
    return {r, {}};
  }

  static HomTransform rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r(0, 0) = c;   r(0, 1) = -s;  r(0, 2) = 0.0;
    r(1, 0) = s;   r(1, 1) = c;   r(1, 2) = 0.0;
    r(2, 0) = 0.0; r(2, 1) = 0.0; r(2, 2) = 1.0;
    return {r, {}};
  }

  static constexpr double kRigidTol = 1e-12;

 private:
  Mat3 r_;
  Vec3 t_;
};

/// Compose a then b as "apply b first, then a" (standard matrix order).
///
/// The arithmetic matches a textbook 4x4 product term for term, including
/// evaluation order, so chaining HomTransforms reproduces a plain 4x4
/// matrix chain exactly.
inline HomTransform operator*(const HomTransform& a, const HomTransform& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a.rotation()(i, 0) * b.rotation()(0, j) +
                a.rotation()(i, 1) * b.rotation()(1, j) +
                a.rotation()(i, 2) * b.rotation()(2, j);
  Vec3 t;
  t.x = a.rotation()(0, 0) * b.translation().x + a.rotation()(0, 1) * b.translation().y +
        a.rotation()(0, 2) * b.translation().z + a.translation().x;
  t.y = a.rotation()(1, 0) * b.translation().x + a.rotation()(1, 1) * b.translation().y +
        a.rotation()(1, 2) * b.translation().z + a.translation().y;
  t.z = a.rotation()(2, 0) * b.translation().x + a.rotation()(2, 1) * b.translation().y +
        a.rotation()(2, 2) * b.translation().z + a.translation().z;
  return {r, t};
}

/// Relative rotation angle between two rotations, in [0, pi].  Identical
/// matrices short-circuit to exactly zero; the trace formula below has an
/// acos-induced floor near 1e-8 that would otherwise mask true equality.
inline double rotation_angle_between(const Mat3& a, const Mat3& b) {
  if (a.m == b.m) return 0.0;
  const Mat3 rel = a.transposed() * b;
  const double tr = rel(0, 0) + rel(1, 1) + rel(2, 2);
  const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

}  // namespace oriloco
