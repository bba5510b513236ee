#include "nklab/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "nklab/cross7.hpp"
#include "nklab/quat.hpp"
#include "nklab/s3s3.hpp"

namespace nk::cat {

namespace {

// S^3 factor: exponential chart at the identity, coords u0..u2.
// S^2 factor: unit imaginary quaternion from colatitude/longitude (u3, u4),
// kept away from the poles so the immersion stays rank 5.
Quat s3_of(const hyp::Params& u) { return exp_im({u[0], u[1], u[2]}); }

Quat s2_of(const hyp::Params& u) {
  const double th = u[3], ph = u[4];
  return Quat{0.0, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
              std::cos(th)};
}

AVec pack_pair(const Quat& p, const Quat& q) {
  AVec v(8);
  v << p.w, p.x, p.y, p.z, q.w, q.x, q.y, q.z;
  return v;
}

std::array<std::pair<double, double>, 5> product_box() {
  return {{{-0.35, 0.35}, {-0.35, 0.35}, {-0.35, 0.35}, {0.7, 2.4}, {0.3, 5.9}}};
}

Expected commuting_expected() {
  Expected e;
  e.commutator_tol = 1e-5;
  e.codazzi_tol = 1e-3;
  return e;
}

}  // namespace

Entry f1() {
  Entry e;
  e.immersion.name = "f1";
  e.immersion.ambient = &ambient_s3s3();
  e.immersion.box = product_box();
  e.immersion.map = [](const hyp::Params& u) { return pack_pair(s3_of(u), s2_of(u)); };
  e.expected = commuting_expected();
  return e;
}

Entry f2() {
  Entry e;
  e.immersion.name = "f2";
  e.immersion.ambient = &ambient_s3s3();
  e.immersion.box = product_box();
  e.immersion.map = [](const hyp::Params& u) { return pack_pair(s2_of(u), s3_of(u)); };
  e.expected = commuting_expected();
  return e;
}

Entry f3() {
  Entry e;
  e.immersion.name = "f3";
  e.immersion.ambient = &ambient_s3s3();
  e.immersion.box = product_box();
  e.immersion.map = [](const hyp::Params& u) {
    const Quat x = s3_of(u), y = s2_of(u);
    return pack_pair(conj(x), y * conj(x));
  };
  e.expected = commuting_expected();
  return e;
}

namespace {

// Unit-sphere chart of S^5 inside the hyperplane orthogonal to e7: the
// exponential chart at e1 with directions e2..e6.
Vec7 s5_chart(const hyp::Params& u) {
  const double t = u.norm();
  double sinc = t < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
  Vec7 x = Vec7::Zero();
  x[0] = std::cos(t);
  for (int i = 0; i < 5; ++i) x[i + 1] = sinc * u[i];
  return x;
}

std::array<std::pair<double, double>, 5> sphere_box() {
  return {{{-0.4, 0.4}, {-0.4, 0.4}, {-0.4, 0.4}, {-0.4, 0.4}, {-0.4, 0.4}}};
}

}  // namespace

Entry geodesic_sphere_s6(double r) {
  if (!(r > 0.0 && r < M_PI))
    throw std::invalid_argument("geodesic_sphere_s6: radius must be in (0, pi)");
  Entry e;
  e.immersion.name = r == M_PI / 2 ? "equator" : "sphere";
  e.immersion.ambient = &ambient_s6();
  e.immersion.box = sphere_box();
  const double cr = std::cos(r), sr = std::sin(r);
  e.immersion.map = [cr, sr](const hyp::Params& u) -> AVec {
    Vec7 x = sr * s5_chart(u);
    x[6] += cr;
    return x;
  };
  e.expected.codazzi_tol = 1e-3;
  if (std::abs(r - M_PI / 2) < 1e-12) {
    e.expected.shape_norm_tol = 1e-6;
    e.expected.anticommutator_tol = 1e-6;
    e.expected.codazzi_tol = 1e-6;  // both sides vanish
  } else {
    e.expected.umbilic_tol = 1e-4;
    e.expected.commutator_tol = 1e-5;
  }
  return e;
}

Entry equator_s5() { return geodesic_sphere_s6(M_PI / 2); }

Entry by_name(const std::string& name) {
  if (name == "f1") return f1();
  if (name == "f2") return f2();
  if (name == "f3") return f3();
  if (name == "equator") return equator_s5();
  if (name.rfind("sphere:", 0) == 0) {
    const std::string arg = name.substr(7);
    size_t pos = 0;
    double r = 0.0;
    try {
      r = std::stod(arg, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad sphere radius: " + arg);
    }
    if (pos != arg.size()) throw std::invalid_argument("bad sphere radius: " + arg);
    return geodesic_sphere_s6(r);
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace nk::cat
