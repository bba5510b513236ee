#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace nk {

// Hamilton quaternion, components (w, x, y, z) with i*j = k.
struct Quat {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quat() = default;
  Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quat identity() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quat from_imag(const Eigen::Vector3d& v) { return {0.0, v[0], v[1], v[2]}; }

  Eigen::Vector3d imag() const { return {x, y, z}; }
  Eigen::Vector4d coeffs() const { return {w, x, y, z}; }

  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quat operator/(double s) const { return {w / s, x / s, y / s, z / s}; }
};

inline Quat operator*(double s, const Quat& q) { return q * s; }

inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Componentwise R^4 inner product.
inline double dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm2(const Quat& a) { return dot(a, a); }
inline double norm(const Quat& a) { return std::sqrt(norm2(a)); }

inline Quat conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

inline Quat inverse(const Quat& a) {
  const double n2 = norm2(a);
  if (n2 <= 0.0) throw std::domain_error("inverse of zero quaternion");
  return conj(a) / n2;
}

inline bool approx_equal(const Quat& a, const Quat& b, double tol) {
  return norm(a - b) <= tol;
}

// exp of an imaginary quaternion: cos|v| + sin|v| v/|v|.
Quat exp_im(const Eigen::Vector3d& v);

// Differential of exp_im at v in direction e (exact, with series near v = 0).
Quat dexp_im(const Eigen::Vector3d& v, const Eigen::Vector3d& e);

// Principal logarithm of a unit quaternion (w > 0 branch); exp_im(log_im(q)) = q.
Eigen::Vector3d log_im(const Quat& q);

}  // namespace nk
