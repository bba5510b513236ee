#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nklab/cross7.hpp"
#include "nklab/quat.hpp"
#include "nklab/rng.hpp"

using namespace nk;

namespace {
const Quat kOne{1, 0, 0, 0};
const Quat kI{0, 1, 0, 0};
const Quat kJ{0, 0, 1, 0};
const Quat kK{0, 0, 0, 1};
}  // namespace

TEST_CASE("hamilton product table") {
  CHECK(approx_equal(kI * kJ, kK, 0.0));
  CHECK(approx_equal(kJ * kK, kI, 0.0));
  CHECK(approx_equal(kK * kI, kJ, 0.0));
  CHECK(approx_equal(kI * kI, -kOne, 0.0));
  CHECK(approx_equal((kOne + kI) * (kOne + kJ), kOne + kI + kJ + kK, 0.0));
}

TEST_CASE("conjugate, inverse, norm") {
  CHECK(approx_equal(conj(kI), -kI, 0.0));
  CHECK(approx_equal(inverse(Quat{2, 0, 0, 0}), Quat{0.5, 0, 0, 0}, 0.0));
  CHECK(norm(kOne + kI + kJ + kK) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(inverse(Quat{}), std::domain_error);

  SampleRng rng(123);
  for (int s = 0; s < 100; ++s) {
    const Quat q = rng.unit_quat();
    CHECK(norm(q * inverse(q) - kOne) < 1e-14);
    CHECK(norm(conj(q) * q - kOne * norm2(q)) < 1e-14);
  }
}

TEST_CASE("norm is multiplicative") {
  SampleRng rng(7);
  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    const Quat a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const Quat b{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    worst = std::max(worst, std::abs(norm(a * b) - norm(a) * norm(b)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("exp_im basics") {
  CHECK(approx_equal(exp_im({M_PI / 2, 0, 0}), kI, 1e-15));
  CHECK(approx_equal(exp_im({0, 0, 0}), kOne, 0.0));
  CHECK(approx_equal(exp_im({M_PI, 0, 0}), -kOne, 1e-15));

  SampleRng rng(11);
  for (int s = 0; s < 200; ++s) {
    const Eigen::Vector3d v = rng.normal_vector(3);
    CHECK(norm(exp_im(v) * exp_im(-v) - kOne) < 1e-12);
    CHECK(std::abs(norm(exp_im(v)) - 1.0) < 1e-14);
  }
}

TEST_CASE("log_im inverts exp_im") {
  SampleRng rng(17);
  for (int s = 0; s < 200; ++s) {
    Eigen::Vector3d v = rng.normal_vector(3);
    if (v.norm() > 1.5) v *= 1.5 / v.norm();  // keep inside the principal branch
    CHECK((log_im(exp_im(v)) - v).norm() < 1e-12);
  }
}

TEST_CASE("dexp_im matches finite differences") {
  SampleRng rng(19);
  const double h = 1e-6;
  for (int s = 0; s < 50; ++s) {
    const Eigen::Vector3d v = rng.normal_vector(3);
    const Eigen::Vector3d e = rng.normal_vector(3);
    const Quat fd = (exp_im(v + h * e) - exp_im(v - h * e)) / (2.0 * h);
    CHECK(norm(dexp_im(v, e) - fd) < 1e-8);
  }
  // limit at v = 0: derivative is e itself
  const Eigen::Vector3d e{0.3, -0.2, 0.9};
  CHECK(norm(dexp_im(Eigen::Vector3d::Zero(), e) - Quat::from_imag(e)) < 1e-15);
}

TEST_CASE("cross7 table entries") {
  auto basis = [](int i) {
    Vec7 e = Vec7::Zero();
    e[i] = 1.0;
    return e;
  };
  // oriented lines {i, i+1, i+3} mod 7
  for (int i = 0; i < 7; ++i) {
    CHECK((cross7(basis(i), basis((i + 1) % 7)) - basis((i + 3) % 7)).norm() == 0.0);
    CHECK((cross7(basis((i + 1) % 7), basis(i)) + basis((i + 3) % 7)).norm() == 0.0);
  }
  // any pair of distinct basis vectors has unit-norm product
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) CHECK(cross7(basis(i), basis(j)).norm() == doctest::Approx(1.0));
}

TEST_CASE("cross7 is alternating and orthogonal to its arguments") {
  SampleRng rng(23);
  for (int s = 0; s < 500; ++s) {
    const Vec7 a = rng.normal_vector(7), b = rng.normal_vector(7);
    CHECK(cross7(a, a).norm() < 1e-13 * a.squaredNorm());
    const Vec7 c = cross7(a, b);
    CHECK(std::abs(c.dot(a)) < 1e-12 * a.norm() * a.norm() * b.norm());
    CHECK(std::abs(c.dot(b)) < 1e-12 * a.norm() * b.norm() * b.norm());
  }
}

TEST_CASE("cross7 norm identity (composition algebra)") {
  SampleRng rng(29);
  for (int s = 0; s < 2000; ++s) {
    const Vec7 a = rng.normal_vector(7), b = rng.normal_vector(7);
    const double lhs = cross7(a, b).squaredNorm();
    const double rhs = a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2);
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + rhs));
  }
}

TEST_CASE("triple product totally antisymmetric") {
  SampleRng rng(31);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    Vec7 a = rng.normal_vector(7), b = rng.normal_vector(7), c = rng.normal_vector(7);
    a.normalize();
    b.normalize();
    c.normalize();
    const double abc = cross7(a, b).dot(c);
    worst = std::max(worst, std::abs(abc + cross7(b, a).dot(c)));
    worst = std::max(worst, std::abs(abc + cross7(a, c).dot(b)));
    worst = std::max(worst, std::abs(abc - cross7(c, a).dot(b)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("seeded draws are reproducible") {
  SampleRng a(42);
  const Quat q = a.unit_quat();
  // golden first draw for master seed 42 (frozen at first build)
  CHECK(q.w == doctest::Approx(-0.45242838588890461).epsilon(1e-14));
  CHECK(q.x == doctest::Approx(-0.54016465021653171).epsilon(1e-14));
  CHECK(q.y == doctest::Approx(0.46499489909732905).epsilon(1e-14));
  CHECK(q.z == doctest::Approx(0.53601347941248378).epsilon(1e-14));

  SampleRng b(42);
  const Quat q2 = b.unit_quat();
  CHECK(norm(q - q2) == 0.0);

  SampleRng c(43);
  CHECK(norm(q - c.unit_quat()) > 1e-3);

  // substreams differ and do not depend on draw order
  SampleRng s0(42, 0), s1(42, 1);
  CHECK(std::abs(s0.uniform() - s1.uniform()) > 1e-6);
}

TEST_CASE("tangent draws are orthogonal to the base point") {
  SampleRng rng(37);
  for (int s = 0; s < 200; ++s) {
    const Quat p = rng.unit_quat();
    const Quat t = rng.tangent_at(p);
    CHECK(std::abs(dot(p, t)) < 1e-12 * (1.0 + norm(t)));
  }
}
