#include "nklab/fdgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace nk::fd {

namespace {

// dg[l](i, j) = d g_ij / d x_l, central differences
std::vector<Eigen::MatrixXd> metric_derivatives(const MetricFn& g,
                                                const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  std::vector<Eigen::MatrixXd> dg(n);
  for (int l = 0; l < n; ++l) {
    Eigen::VectorXd xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    dg[l] = (g(xp) - g(xm)) / (2.0 * h);
  }
  return dg;
}

Christoffel christoffel_from(const MetricFn& g, const Eigen::VectorXd& x,
                             const std::vector<Eigen::MatrixXd>& dg) {
  const int n = static_cast<int>(x.size());
  Christoffel c;
  c.n = n;
  c.gamma.assign(static_cast<size_t>(n) * n * n, 0.0);
  c.metric = g(x);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(c.metric);
  if (ldlt.info() != Eigen::Success || c.metric.determinant() < 1e-8)
    throw std::domain_error("christoffel: singular metric");
  c.metric_inv = c.metric.inverse();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += c.metric_inv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        c.at(k, i, j) = 0.5 * s;
        c.at(k, j, i) = 0.5 * s;
      }
    }
  }
  return c;
}

}  // namespace

Christoffel christoffel(const MetricFn& g, const Eigen::VectorXd& x, double h) {
  return christoffel_from(g, x, metric_derivatives(g, x, h));
}

double metric_compatibility_residual(const MetricFn& g, const Eigen::VectorXd& x,
                                     const Christoffel& c, double h_check) {
  const int n = c.n;
  const auto dg = metric_derivatives(g, x, h_check);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = dg[i](j, k);
        for (int l = 0; l < n; ++l)
          s -= c.at(l, i, j) * c.metric(l, k) + c.at(l, i, k) * c.metric(j, l);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

Riemann riemann(const MetricFn& g, const Eigen::VectorXd& x, double h_gamma,
                double h_outer) {
  const int n = static_cast<int>(x.size());
  const Christoffel c0 = christoffel(g, x, h_gamma);

  // dGamma[d](k,i,j) = d Gamma^k_ij / d x_d
  std::vector<Christoffel> cp(n), cm(n);
  for (int d = 0; d < n; ++d) {
    Eigen::VectorXd xp = x, xm = x;
    xp[d] += h_outer;
    xm[d] -= h_outer;
    cp[d] = christoffel(g, xp, h_gamma);
    cm[d] = christoffel(g, xm, h_gamma);
  }
  auto dgamma = [&](int d, int l, int i, int j) {
    return (cp[d].at(l, i, j) - cm[d].at(l, i, j)) / (2.0 * h_outer);
  };

  Riemann rm;
  rm.n = n;
  rm.r.assign(static_cast<size_t>(n) * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = dgamma(i, l, j, k) - dgamma(j, l, i, k);
          for (int m = 0; m < n; ++m)
            v += c0.at(l, i, m) * c0.at(m, j, k) - c0.at(l, j, m) * c0.at(m, i, k);
          rm.at(l, k, i, j) = v;
        }
  return rm;
}

Eigen::VectorXd riemann_apply(const Riemann& rm, const Eigen::VectorXd& X,
                              const Eigen::VectorXd& Y, const Eigen::VectorXd& Z) {
  const int n = rm.n;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += rm.at(l, k, i, j) * X[i] * Y[j] * Z[k];
    out[l] = s;
  }
  return out;
}

double bianchi_residual(const Riemann& rm) {
  const int n = rm.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double s = rm.at(l, k, i, j) + rm.at(l, i, j, k) + rm.at(l, j, k, i);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

double geodesic_speed_drift(const MetricFn& g, const Eigen::VectorXd& x0,
                            const Eigen::VectorXd& v0, double h_gamma,
                            double t_end, int steps) {
  const int n = static_cast<int>(x0.size());
  auto accel = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    const Christoffel c = christoffel(g, x, h_gamma);
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += c.at(k, i, j) * v[i] * v[j];
      a[k] = -s;
    }
    return a;
  };

  Eigen::VectorXd x = x0, v = v0;
  const double speed0 = v0.dot(g(x0) * v0);
  double worst = 0.0;
  const double dt = t_end / steps;
  for (int s = 0; s < steps; ++s) {
    const Eigen::VectorXd k1x = v, k1v = accel(x, v);
    const Eigen::VectorXd k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
    const Eigen::VectorXd k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
    const Eigen::VectorXd k4x = v + dt * k3v, k4v = accel(x + dt * k3x, v + dt * k3v);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    worst = std::max(worst, std::abs(v.dot(g(x) * v) - speed0));
  }
  return worst;
}

}  // namespace nk::fd
