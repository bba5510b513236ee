#include "nklab/s6.hpp"

#include <stdexcept>

namespace nk::s6 {

Vec7 normalize_point(const Vec7& x) {
  const double n = x.norm();
  if (n < 1e-12) throw std::domain_error("normalize_point: zero vector");
  return x / n;
}

Vec7 project_tangent(const Vec7& x, const Vec7& v) {
  return v - x * (x.dot(v) / x.squaredNorm());
}

void check_tangent(const Vec7& x, const Vec7& v) {
  if (std::abs(x.dot(v)) > 1e-8 * (1.0 + v.norm()))
    throw std::invalid_argument("vector not tangent to S^6");
}

Vec7 j6(const Vec7& x, const Vec7& v) {
  check_tangent(x, v);
  return cross7(x, v);
}

Vec7 connection_deriv(const std::function<Vec7(double)>& curve,
                      const std::function<Vec7(double)>& field, double h) {
  const Vec7 x = curve(0.0);
  const Vec7 d = (field(h) - field(-h)) / (2.0 * h);
  return project_tangent(x, d);
}

Vec7 g6(const Vec7& x, const Vec7& X, const Vec7& Y, double h) {
  check_tangent(x, X);
  check_tangent(x, Y);
  auto curve = [&](double t) { return normalize_point(x + t * X); };
  // constant extension projected pointwise; z x P_z(Y) = z x Y since z x z = 0
  auto ext = [&](double t) { return project_tangent(curve(t), Y); };
  auto jext = [&](double t) {
    const Vec7 z = curve(t);
    return cross7(z, Y);
  };
  const Vec7 d_jy = connection_deriv(curve, jext, h);
  const Vec7 d_y = connection_deriv(curve, ext, h);
  return d_jy - cross7(x, d_y);
}

Vec7 curvature(const Vec7& X, const Vec7& Y, const Vec7& Z) {
  return Y.dot(Z) * X - X.dot(Z) * Y;
}

}  // namespace nk::s6
