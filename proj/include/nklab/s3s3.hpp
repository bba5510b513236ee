#pragma once

#include <array>
#include <functional>
#include <memory>

#include "nklab/fdgeom.hpp"
#include "nklab/linalg.hpp"
#include "nklab/quat.hpp"

namespace nk::s3s3 {

// The homogeneous nearly Kahler structure on S^3 x S^3.
//
// Points are pairs (p, q) of unit quaternions. A tangent vector at (p, q) is
// Z = (U, V) with <U, p> = <V, q> = 0. The almost complex structure,
// Hermitian metric, almost product structure and curvature tensor are closed
// formulas:
//
//   J Z = (1/sqrt 3) (2 p q^-1 V - U, -2 q p^-1 U + V)
//   g(Z, Z') = 4/3 (<U,U'> + <V,V'>) - 2/3 (<p^-1 U, q^-1 V'> + <p^-1 U', q^-1 V>)
//   P Z = (p q^-1 V, q p^-1 U)
//
// The Levi-Civita connection of g, G = (nabla J) and the numeric curvature
// are obtained by finite differences in the left-translated exponential
// chart (x, y) -> (p exp_im(x), q exp_im(y)).

struct Point {
  Quat p, q;
};

struct Tangent {
  Point base;
  Quat u, v;
};

// Normalizes both factors; throws if either has tiny norm.
Point make_point(const Quat& p, const Quat& q);

// Validates tangency to 1e-8 (relative); throws std::invalid_argument.
Tangent make_tangent(const Point& base, const Quat& u, const Quat& v);

// Removes the radial components, returning an exactly tangent vector.
Tangent project_tangent(const Point& base, const Quat& u, const Quat& v);

bool same_base(const Point& a, const Point& b, double tol = 1e-9);

Tangent add(const Tangent& a, const Tangent& b);
Tangent scale(const Tangent& a, double s);

double metric(const Tangent& z, const Tangent& zp);
double g_norm(const Tangent& z);

Tangent almost_complex(const Tangent& z);
Tangent product_structure(const Tangent& z);

// Closed curvature formula of the homogeneous NK structure (5/12, 1/12, 1/3
// coefficient blocks).
Tangent curvature_formula(const Tangent& x, const Tangent& y, const Tangent& z);

// ---------------------------------------------------------------------------
// Chart machinery

class Chart {
 public:
  explicit Chart(const Point& base);

  const Point& base() const { return base_; }

  Point at(const Vec6& c) const;
  Tangent frame_vector(const Vec6& c, int i) const;
  std::array<Tangent, 6> frame(const Vec6& c) const;
  Mat6 metric_matrix(const Vec6& c) const;

  // Chart coordinates of a nearby point; throws outside |c| <= 0.6.
  Vec6 to_coords(const Point& pt) const;

  // Components of a tangent vector at chart point c in the coordinate frame
  // (Gram solve under g).
  Vec6 components(const Vec6& c, const Tangent& w) const;
  Tangent combine(const Vec6& c, const Vec6& comps) const;

  fd::MetricFn metric_fn() const;

 private:
  Point base_;
};

fd::Christoffel christoffel(const Chart& chart, const Vec6& coords, double h);

// Chart plus Christoffel symbols at the chart origin; evaluates covariant
// derivatives of tangent fields along curves through the base point.
class Connection {
 public:
  explicit Connection(const Point& base, double h_metric = 1e-4);

  const Chart& chart() const { return chart_; }
  const fd::Christoffel& christoffel() const { return gamma_; }

  // (nabla_{curve'(0)} field)(0); curve(0) must be the base point.
  Tangent derivative(const std::function<Point(double)>& curve,
                     const std::function<Tangent(double)>& field, double h) const;

  // Same along the chart-straight curve with coordinate velocity vel.
  Tangent derivative_straight(const Vec6& vel,
                              const std::function<Tangent(double)>& field,
                              double h) const;

 private:
  Tangent correct(const Vec6& zeta_dot, const Vec6& comp_dot, const Vec6& comp0) const;

  Chart chart_;
  fd::Christoffel gamma_;
};

// Covariant derivative of a coordinate-component field at a chart point:
// direction and field components are in the coordinate frame.
Vec6 covariant_derivative(const Chart& chart, const Vec6& coords,
                          const std::function<Vec6(const Vec6&)>& field_components,
                          const Vec6& direction, double h);

// ---------------------------------------------------------------------------
// Derived tensors (finite differences)

// G(X, Y) = (nabla_X J) Y
Tangent g_tensor(const Tangent& x, const Tangent& y, const FdSteps& steps = {});
Tangent g_tensor(const Connection& conn, const Tangent& x, const Tangent& y, double h);

// Numeric Riemann tensor at the chart base point.
Tangent curvature_numeric(const Tangent& x, const Tangent& y, const Tangent& z,
                          const FdSteps& steps = {});

// ||2 (nabla_X P) Y - J G(X, PY) - J P G(X, Y)||_g
double nabla_p_residual(const Tangent& x, const Tangent& y, const FdSteps& steps = {});

}  // namespace nk::s3s3
