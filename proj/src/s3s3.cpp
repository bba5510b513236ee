#include "nklab/s3s3.hpp"

#include <cmath>
#include <stdexcept>

namespace nk::s3s3 {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;

void check_same_base(const Tangent& a, const Tangent& b) {
  if (!same_base(a.base, b.base))
    throw std::invalid_argument("tangent vectors at different base points");
}
}  // namespace

Point make_point(const Quat& p, const Quat& q) {
  const double np = norm(p), nq = norm(q);
  if (np < 1e-12 || nq < 1e-12) throw std::domain_error("make_point: zero factor");
  return {p / np, q / nq};
}

Tangent project_tangent(const Point& base, const Quat& u, const Quat& v) {
  const Quat pu = u - base.p * (dot(u, base.p) / norm2(base.p));
  const Quat pv = v - base.q * (dot(v, base.q) / norm2(base.q));
  return {base, pu, pv};
}

Tangent make_tangent(const Point& base, const Quat& u, const Quat& v) {
  const double scale = 1.0 + norm(u) + norm(v);
  if (std::abs(dot(u, base.p)) > 1e-8 * scale || std::abs(dot(v, base.q)) > 1e-8 * scale)
    throw std::invalid_argument("make_tangent: vector not tangent");
  return {base, u, v};
}

bool same_base(const Point& a, const Point& b, double tol) {
  return norm(a.p - b.p) <= tol && norm(a.q - b.q) <= tol;
}

Tangent add(const Tangent& a, const Tangent& b) {
  check_same_base(a, b);
  return {a.base, a.u + b.u, a.v + b.v};
}

Tangent scale(const Tangent& a, double s) { return {a.base, a.u * s, a.v * s}; }

double metric(const Tangent& z, const Tangent& zp) {
  check_same_base(z, zp);
  const Quat pinv_u = conj(z.base.p) * z.u;
  const Quat qinv_v = conj(z.base.q) * z.v;
  const Quat pinv_up = conj(z.base.p) * zp.u;
  const Quat qinv_vp = conj(z.base.q) * zp.v;
  return 4.0 / 3.0 * (dot(z.u, zp.u) + dot(z.v, zp.v)) -
         2.0 / 3.0 * (dot(pinv_u, qinv_vp) + dot(pinv_up, qinv_v));
}

double g_norm(const Tangent& z) { return std::sqrt(std::max(0.0, metric(z, z))); }

Tangent almost_complex(const Tangent& z) {
  const Quat pq = z.base.p * conj(z.base.q);
  const Quat qp = z.base.q * conj(z.base.p);
  const Quat u = (pq * z.v * 2.0 - z.u) / kSqrt3;
  const Quat v = (qp * z.u * (-2.0) + z.v) / kSqrt3;
  return {z.base, u, v};
}

Tangent product_structure(const Tangent& z) {
  const Quat pq = z.base.p * conj(z.base.q);
  const Quat qp = z.base.q * conj(z.base.p);
  return {z.base, pq * z.v, qp * z.u};
}

Tangent curvature_formula(const Tangent& x, const Tangent& y, const Tangent& z) {
  check_same_base(x, y);
  check_same_base(x, z);
  const Tangent jx = almost_complex(x), jy = almost_complex(y), jz = almost_complex(z);
  const Tangent px = product_structure(x), py = product_structure(y);
  const Tangent jpx = almost_complex(px), jpy = almost_complex(py);

  Tangent out = scale(x, 5.0 / 12.0 * metric(y, z));
  out = add(out, scale(y, -5.0 / 12.0 * metric(x, z)));
  out = add(out, scale(jx, 1.0 / 12.0 * metric(jy, z)));
  out = add(out, scale(jy, -1.0 / 12.0 * metric(jx, z)));
  out = add(out, scale(jz, -2.0 / 12.0 * metric(jx, y)));
  out = add(out, scale(px, 1.0 / 3.0 * metric(py, z)));
  out = add(out, scale(py, -1.0 / 3.0 * metric(px, z)));
  out = add(out, scale(jpx, 1.0 / 3.0 * metric(jpy, z)));
  out = add(out, scale(jpy, -1.0 / 3.0 * metric(jpx, z)));
  return out;
}

// ---------------------------------------------------------------------------

Chart::Chart(const Point& base) : base_(base) {}

Point Chart::at(const Vec6& c) const {
  return {base_.p * exp_im(c.head<3>()), base_.q * exp_im(c.tail<3>())};
}

Tangent Chart::frame_vector(const Vec6& c, int i) const {
  const Point pt = at(c);
  Quat u{}, v{};
  if (i < 3) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[i] = 1.0;
    u = base_.p * dexp_im(c.head<3>(), e);
  } else {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[i - 3] = 1.0;
    v = base_.q * dexp_im(c.tail<3>(), e);
  }
  return {pt, u, v};
}

std::array<Tangent, 6> Chart::frame(const Vec6& c) const {
  std::array<Tangent, 6> f{};
  for (int i = 0; i < 6; ++i) f[i] = frame_vector(c, i);
  return f;
}

Mat6 Chart::metric_matrix(const Vec6& c) const {
  const auto f = frame(c);
  Mat6 g;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      g(i, j) = metric(f[i], f[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Vec6 Chart::to_coords(const Point& pt) const {
  Vec6 c;
  c.head<3>() = log_im(conj(base_.p) * pt.p);
  c.tail<3>() = log_im(conj(base_.q) * pt.q);
  if (c.norm() > 0.6) throw std::domain_error("chart: point outside working domain");
  return c;
}

Vec6 Chart::components(const Vec6& c, const Tangent& w) const {
  const auto f = frame(c);
  Mat6 g;
  Vec6 rhs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      g(i, j) = metric(f[i], f[j]);
      g(j, i) = g(i, j);
    }
    rhs[i] = metric(f[i], w);
  }
  return g.ldlt().solve(rhs);
}

Tangent Chart::combine(const Vec6& c, const Vec6& comps) const {
  const auto f = frame(c);
  Quat u{}, v{};
  for (int i = 0; i < 6; ++i) {
    u = u + f[i].u * comps[i];
    v = v + f[i].v * comps[i];
  }
  return {f[0].base, u, v};
}

fd::MetricFn Chart::metric_fn() const {
  return [*this](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    return metric_matrix(Vec6(x));
  };
}

fd::Christoffel christoffel(const Chart& chart, const Vec6& coords, double h) {
  return fd::christoffel(chart.metric_fn(), coords, h);
}

Connection::Connection(const Point& base, double h_metric)
    : chart_(base), gamma_(s3s3::christoffel(chart_, Vec6::Zero(), h_metric)) {}

Tangent Connection::correct(const Vec6& zeta_dot, const Vec6& comp_dot,
                            const Vec6& comp0) const {
  Vec6 out = comp_dot;
  for (int k = 0; k < 6; ++k) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) s += gamma_.at(k, i, j) * zeta_dot[i] * comp0[j];
    out[k] += s;
  }
  return chart_.combine(Vec6::Zero(), out);
}

Tangent Connection::derivative(const std::function<Point(double)>& curve,
                               const std::function<Tangent(double)>& field,
                               double h) const {
  const Vec6 zp = chart_.to_coords(curve(h));
  const Vec6 zm = chart_.to_coords(curve(-h));
  const Vec6 cp = chart_.components(zp, field(h));
  const Vec6 cm = chart_.components(zm, field(-h));
  const Vec6 c0 = chart_.components(Vec6::Zero(), field(0.0));
  const Vec6 zeta_dot = (zp - zm) / (2.0 * h);
  const Vec6 comp_dot = (cp - cm) / (2.0 * h);
  return correct(zeta_dot, comp_dot, c0);
}

Tangent Connection::derivative_straight(const Vec6& vel,
                                        const std::function<Tangent(double)>& field,
                                        double h) const {
  const Vec6 cp = chart_.components(vel * h, field(h));
  const Vec6 cm = chart_.components(vel * (-h), field(-h));
  const Vec6 c0 = chart_.components(Vec6::Zero(), field(0.0));
  const Vec6 comp_dot = (cp - cm) / (2.0 * h);
  return correct(vel, comp_dot, c0);
}

Vec6 covariant_derivative(const Chart& chart, const Vec6& coords,
                          const std::function<Vec6(const Vec6&)>& field_components,
                          const Vec6& direction, double h) {
  const fd::Christoffel gamma = christoffel(chart, coords, h);
  Vec6 out = Vec6::Zero();
  const Vec6 c0 = field_components(coords);
  for (int i = 0; i < 6; ++i) {
    if (direction[i] == 0.0) continue;
    Vec6 xp = coords, xm = coords;
    xp[i] += h;
    xm[i] -= h;
    out += direction[i] * (field_components(xp) - field_components(xm)) / (2.0 * h);
  }
  for (int k = 0; k < 6; ++k) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) s += gamma.at(k, i, j) * direction[i] * c0[j];
    out[k] += s;
  }
  return out;
}

// ---------------------------------------------------------------------------

Tangent g_tensor(const Connection& conn, const Tangent& x, const Tangent& y, double h) {
  const Chart& chart = conn.chart();
  const Vec6 cx = chart.components(Vec6::Zero(), x);
  const Vec6 cy = chart.components(Vec6::Zero(), y);
  auto ext = [&](double t) { return chart.combine(cx * t, cy); };
  auto jext = [&](double t) { return almost_complex(ext(t)); };
  const Tangent d_jy = conn.derivative_straight(cx, jext, h);
  const Tangent d_y = conn.derivative_straight(cx, ext, h);
  return add(d_jy, scale(almost_complex(d_y), -1.0));
}

Tangent g_tensor(const Tangent& x, const Tangent& y, const FdSteps& steps) {
  check_same_base(x, y);
  const Connection conn(x.base, steps.h1);
  return g_tensor(conn, x, y, steps.h1);
}

Tangent curvature_numeric(const Tangent& x, const Tangent& y, const Tangent& z,
                          const FdSteps& steps) {
  check_same_base(x, y);
  check_same_base(x, z);
  const Chart chart(x.base);
  const fd::Riemann rm =
      fd::riemann(chart.metric_fn(), Vec6::Zero(), steps.h1, steps.h2);
  const Vec6 cx = chart.components(Vec6::Zero(), x);
  const Vec6 cy = chart.components(Vec6::Zero(), y);
  const Vec6 cz = chart.components(Vec6::Zero(), z);
  const Eigen::VectorXd out = fd::riemann_apply(rm, cx, cy, cz);
  return chart.combine(Vec6::Zero(), Vec6(out));
}

double nabla_p_residual(const Tangent& x, const Tangent& y, const FdSteps& steps) {
  check_same_base(x, y);
  const Connection conn(x.base, steps.h1);
  const Chart& chart = conn.chart();
  const Vec6 cx = chart.components(Vec6::Zero(), x);
  const Vec6 cy = chart.components(Vec6::Zero(), y);
  auto ext = [&](double t) { return chart.combine(cx * t, cy); };
  auto pext = [&](double t) { return product_structure(ext(t)); };
  const Tangent d_py = conn.derivative_straight(cx, pext, steps.h1);
  const Tangent d_y = conn.derivative_straight(cx, ext, steps.h1);
  // (nabla_X P)Y = nabla_X(P Yext) - P nabla_X Yext
  const Tangent nabla_p = add(d_py, scale(product_structure(d_y), -1.0));

  const Tangent gxy = g_tensor(conn, x, y, steps.h1);
  const Tangent gxpy = g_tensor(conn, x, product_structure(y), steps.h1);
  Tangent res = scale(nabla_p, 2.0);
  res = add(res, scale(almost_complex(gxpy), -1.0));
  res = add(res, scale(almost_complex(product_structure(gxy)), -1.0));
  return g_norm(res);
}

}  // namespace nk::s3s3
