#pragma once

#include <functional>

#include "nklab/cross7.hpp"
#include "nklab/linalg.hpp"

namespace nk::s6 {

// The homogeneous nearly Kahler structure on the round S^6 in Im O = R^7:
// J X = x cross X at x, the metric is Euclidean, and the Levi-Civita
// connection is the flat derivative projected to the tangent space.

Vec7 normalize_point(const Vec7& x);
Vec7 project_tangent(const Vec7& x, const Vec7& v);
void check_tangent(const Vec7& x, const Vec7& v);

Vec7 j6(const Vec7& x, const Vec7& v);

// Covariant derivative at t = 0 of a tangent field along a curve in S^6.
Vec7 connection_deriv(const std::function<Vec7(double)>& curve,
                      const std::function<Vec7(double)>& field, double h);

// G(X, Y) = (nabla_X J) Y by finite differences.
Vec7 g6(const Vec7& x, const Vec7& X, const Vec7& Y, double h = 1e-4);

// Round unit-sphere curvature R(X,Y)Z = <Y,Z>X - <X,Z>Y.
Vec7 curvature(const Vec7& X, const Vec7& Y, const Vec7& Z);

}  // namespace nk::s6
