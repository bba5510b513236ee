#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace nk::fd {

// Smooth metric on a coordinate box in R^n, given as x -> (g_ij(x)).
using MetricFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// Christoffel symbols Gamma^k_ij of a metric at a point, built from the
// Koszul formula with central differences of g. Symmetric in (i, j) by
// construction.
struct Christoffel {
  int n = 0;
  std::vector<double> gamma;  // [k*n*n + i*n + j]
  Eigen::MatrixXd metric, metric_inv;

  double at(int k, int i, int j) const { return gamma[(k * n + i) * n + j]; }
  double& at(int k, int i, int j) { return gamma[(k * n + i) * n + j]; }
};

Christoffel christoffel(const MetricFn& g, const Eigen::VectorXd& x, double h);

// Residual of the compatibility identity d_i g_jk = Gamma^l_ij g_lk +
// Gamma^l_ik g_jl, with the metric derivative re-evaluated at an independent
// step. Returns the max abs entry.
double metric_compatibility_residual(const MetricFn& g, const Eigen::VectorXd& x,
                                     const Christoffel& c, double h_check);

// Curvature tensor R(d_i, d_j) d_k = sum_l R[l][k][i][j] d_l from first
// differences of Christoffel symbols (step h_outer) built at step h_gamma.
struct Riemann {
  int n = 0;
  std::vector<double> r;  // [((l*n + k)*n + i)*n + j]

  double at(int l, int k, int i, int j) const { return r[(((l * n) + k) * n + i) * n + j]; }
  double& at(int l, int k, int i, int j) { return r[(((l * n) + k) * n + i) * n + j]; }
};

Riemann riemann(const MetricFn& g, const Eigen::VectorXd& x, double h_gamma,
                double h_outer);

// Coordinate components of R(X, Y) Z.
Eigen::VectorXd riemann_apply(const Riemann& rm, const Eigen::VectorXd& X,
                              const Eigen::VectorXd& Y, const Eigen::VectorXd& Z);

// Max norm over (i,j,k) of the first Bianchi sum R(di,dj)dk + R(dj,dk)di +
// R(dk,di)dj in coordinate components.
double bianchi_residual(const Riemann& rm);

// Integrates the geodesic ODE u'' + Gamma(u)(u',u') = 0 with RK4 and reports
// the worst drift of g(u',u') from its initial value (a metric-compatibility
// oracle for the Christoffel construction).
double geodesic_speed_drift(const MetricFn& g, const Eigen::VectorXd& x0,
                            const Eigen::VectorXd& v0, double h_gamma,
                            double t_end, int steps);

}  // namespace nk::fd
