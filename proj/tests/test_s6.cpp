#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nklab/rng.hpp"
#include "nklab/s6.hpp"

using namespace nk;
using namespace nk::s6;

namespace {

Vec7 random_point(SampleRng& rng) { return normalize_point(Vec7(rng.normal_vector(7))); }

Vec7 random_tangent(SampleRng& rng, const Vec7& x) {
  return project_tangent(x, Vec7(rng.normal_vector(7)));
}

}  // namespace

TEST_CASE("j6 is an isometric almost complex structure") {
  SampleRng rng(201);
  double worst_sq = 0.0, worst_orth = 0.0, worst_iso = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Vec7 x = random_point(rng);
    const Vec7 v = random_tangent(rng, x);
    const Vec7 jv = j6(x, v);
    worst_sq = std::max(worst_sq, (j6(x, jv) + v).norm());
    worst_orth = std::max(worst_orth, std::abs(jv.dot(v)));
    worst_iso = std::max(worst_iso, std::abs(jv.norm() - v.norm()));
    CHECK(std::abs(jv.dot(x)) < 1e-12 * (1 + v.norm()));
  }
  CHECK(worst_sq < 1e-12);
  CHECK(worst_orth < 1e-12);
  CHECK(worst_iso < 1e-12);

  const Vec7 x = random_point(rng);
  Vec7 not_tangent = Vec7::Zero();
  not_tangent += x;
  CHECK_THROWS_AS(j6(x, not_tangent), std::invalid_argument);
}

TEST_CASE("projection connection basics") {
  SampleRng rng(203);
  const Vec7 x = random_point(rng);
  const Vec7 v = random_tangent(rng, x).normalized();

  // great circle is a geodesic
  auto circle = [&](double t) -> Vec7 { return std::cos(t) * x + std::sin(t) * v; };
  auto vel = [&](double t) -> Vec7 { return -std::sin(t) * x + std::cos(t) * v; };
  CHECK(connection_deriv(circle, vel, 1e-5).norm() < 1e-6);

  // metric compatibility along the circle
  const Vec7 w0 = random_tangent(rng, x);
  auto field = [&](double t) { return project_tangent(circle(t), w0); };
  const double h = 1e-5;
  const double lhs = (field(h).dot(vel(h)) - field(-h).dot(vel(-h))) / (2 * h);
  const double rhs = connection_deriv(circle, field, h).dot(vel(0.0)) +
                     field(0.0).dot(connection_deriv(circle, vel, h));
  CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("g6 is skew and type-compatible") {
  SampleRng rng(207);
  double worst_skew = 0.0, worst_zero = 0.0, worst_orth = 0.0, worst_jcomp = 0.0;
  for (int s = 0; s < 200; ++s) {
    const Vec7 x = random_point(rng);
    const Vec7 X = random_tangent(rng, x).normalized();
    const Vec7 Y = random_tangent(rng, x).normalized();
    const Vec7 gxy = g6(x, X, Y);
    worst_zero = std::max(worst_zero, g6(x, X, X).norm());
    worst_skew = std::max(worst_skew, (gxy + g6(x, Y, X)).norm());
    worst_orth = std::max(worst_orth, std::abs(gxy.dot(X)));
    worst_jcomp = std::max(worst_jcomp, (g6(x, X, j6(x, Y)) + j6(x, gxy)).norm());
  }
  CHECK(worst_zero < 1e-5);
  CHECK(worst_skew < 1e-5);
  CHECK(worst_orth < 1e-5);
  CHECK(worst_jcomp < 1e-5);
}

TEST_CASE("g6 norm on adapted pairs is constant (recorded, not pinned)") {
  SampleRng rng(209);
  double lo = 1e30, hi = 0.0;
  for (int s = 0; s < 50; ++s) {
    const Vec7 x = random_point(rng);
    const Vec7 X = random_tangent(rng, x).normalized();
    Vec7 Y = random_tangent(rng, x);
    const Vec7 jx = j6(x, X);
    Y -= X * X.dot(Y);
    Y -= jx * jx.dot(Y);
    Y.normalize();
    const double n2 = g6(x, X, Y).squaredNorm();
    lo = std::min(lo, n2);
    hi = std::max(hi, n2);
  }
  // the measured constant is stable across points; its value is recorded in
  // reports rather than asserted
  CHECK(hi - lo < 1e-3);
  CHECK(lo > 0.1);
  MESSAGE("measured |G(X,Y)|^2 on adapted pairs: ", 0.5 * (lo + hi));
}

TEST_CASE("round curvature tensor") {
  SampleRng rng(211);
  const Vec7 x = random_point(rng);
  const Vec7 X = random_tangent(rng, x), Y = random_tangent(rng, x), Z = random_tangent(rng, x);
  CHECK(curvature(X, X, Z).norm() < 1e-14);
  const double sec = curvature(X, Y, Y).dot(X);
  CHECK(sec == doctest::Approx(X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2)));
}
