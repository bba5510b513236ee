#include "nklab/quat.hpp"

namespace nk {

Quat exp_im(const Eigen::Vector3d& v) {
  const double t = v.norm();
  double sinc;  // sin(t)/t
  if (t < 1e-8) {
    sinc = 1.0 - t * t / 6.0;
  } else {
    sinc = std::sin(t) / t;
  }
  Quat q;
  q.w = std::cos(t);
  q.x = sinc * v[0];
  q.y = sinc * v[1];
  q.z = sinc * v[2];
  return q;
}

Quat dexp_im(const Eigen::Vector3d& v, const Eigen::Vector3d& e) {
  const double t = v.norm();
  const double a = v.dot(e);
  double sinc, c2;  // sin(t)/t and (cos t - sin(t)/t)/t^2
  if (t < 1e-6) {
    sinc = 1.0 - t * t / 6.0;
    c2 = -1.0 / 3.0 + t * t / 30.0;
  } else {
    sinc = std::sin(t) / t;
    c2 = (std::cos(t) - sinc) / (t * t);
  }
  const Eigen::Vector3d vec = sinc * e + (c2 * a) * v;
  Quat q;
  q.w = -sinc * a;
  q.x = vec[0];
  q.y = vec[1];
  q.z = vec[2];
  return q;
}

Eigen::Vector3d log_im(const Quat& q_in) {
  Quat q = q_in;
  if (q.w < 0.0) q = -q;
  const Eigen::Vector3d vec = q.imag();
  const double s = vec.norm();
  const double theta = std::atan2(s, q.w);
  double factor;  // theta / s
  if (s < 1e-9) {
    if (q.w <= 0.0) throw std::domain_error("log_im: quaternion too close to -1");
    factor = 1.0 / q.w;
  } else {
    factor = theta / s;
  }
  return factor * vec;
}

}  // namespace nk
