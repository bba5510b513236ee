#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nklab/catalog.hpp"
#include "nklab/hypersurface.hpp"
#include "nklab/obstructions.hpp"
#include "nklab/rng.hpp"

using namespace nk;
using namespace nk::obs;

TEST_CASE("hopf relation vanishes on degenerate data") {
  const Mat5 zero = Mat5::Zero();
  Mat5 phi = Mat5::Zero();
  phi(1, 0) = 1;
  phi(0, 1) = -1;
  phi(3, 2) = 1;
  phi(2, 3) = -1;
  SampleRng rng(501);
  for (int s = 0; s < 20; ++s) {
    Vec5 x, y;
    for (int i = 0; i < 5; ++i) {
      x[i] = rng.normal();
      y[i] = rng.normal();
    }
    CHECK(hopf_relation_residual(zero, phi, zero, 0.0, x, y) == 0.0);
    CHECK(hopf_relation_residual(zero, phi, Mat5::Identity() * 0.3, 0.0, x, y) == 0.0);
    // umbilical Hopf data satisfies the relation identically
    const double lam = 0.3;
    CHECK(hopf_relation_residual(Mat5::Identity() * lam, phi,
                                 Mat5::Identity() * 0.7, lam, x, y) < 1e-14);
  }
}

TEST_CASE("hopf relation holds on geodesic-sphere data") {
  const cat::Entry sp = cat::geodesic_sphere_s6(M_PI / 3);
  SampleRng rng(503);
  double worst = 0.0;
  for (int s = 0; s < 3; ++s) {
    const hyp::Params u = sp.immersion.random_interior(503, s, 0.02);
    const hyp::Sample smp = hyp::sample(sp.immersion, u);
    const double mu = smp.U.dot(smp.A * smp.U) / smp.U.squaredNorm();
    Mat5 gxi;
    for (int j = 0; j < 5; ++j) {
      Vec5 ej = Vec5::Zero();
      ej[j] = 1.0;
      const AVec g = smp.ambient->g_tensor(smp.P, smp.from_frame(ej), smp.xi, 1e-4);
      gxi.col(j) = smp.to_frame(g);
    }
    for (int t = 0; t < 5; ++t) {
      Vec5 x, y;
      for (int i = 0; i < 5; ++i) {
        x[i] = rng.normal();
        y[i] = rng.normal();
      }
      x.normalize();
      y.normalize();
      worst = std::max(worst, hopf_relation_residual(smp.A, smp.phi, gxi, mu, x, y));
    }
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("tube profile validation") {
  CHECK_THROWS_AS((S6TubeProfile{-0.1, 1.0}).validate(), std::domain_error);
  CHECK_THROWS_AS((S6TubeProfile{0.0, M_PI}).validate(), std::domain_error);
  CHECK_THROWS_AS((S6TubeProfile{0.0, M_PI / 2}).validate(), std::domain_error);  // tan pole
  CHECK_NOTHROW((S6TubeProfile{0.3, 1.0}).validate());
}

TEST_CASE("three-curvature tube margin") {
  // theta = 0, r = pi/4: the relation forces tan(pi/4) = 1 and
  // tan(-pi/4) = -1 to vanish
  CHECK(s6_case1_margin(0.0, M_PI / 4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(s6_case1_margin(0.0, M_PI / 2), std::domain_error);
  // merged tilt curvatures rejected (r = pi/2 makes them equal)
  CHECK_THROWS_AS(s6_case1_margin(0.4, M_PI / 2), std::domain_error);
}

TEST_CASE("two-curvature tube margin") {
  // merge branch theta = 2r - pi/2
  const double r = 1.1, th = 2.0 * r - M_PI / 2;
  const double m = s6_case2_margin(th, r);
  CHECK(m > 0.0);
  CHECK(m == doctest::Approx(std::max(std::abs(std::tan(th + r)),
                                      std::abs(1.0 / std::tan(r)))));
  // r = pi/2 merge branch
  CHECK(s6_case2_margin(0.7, M_PI / 2) ==
        doctest::Approx(1.0 / std::tan(0.7)).epsilon(1e-9));
  // pole at theta + r = pi/2 rejected
  CHECK_THROWS_AS(s6_case2_margin(0.0, M_PI / 2), std::domain_error);
  // off the merge set: precondition error
  CHECK_THROWS_AS(s6_case2_margin(0.3, 1.0), std::invalid_argument);
}

TEST_CASE("paired orthogonal coefficients") {
  SampleRng rng(507);
  for (int s = 0; s < 50; ++s) {
    const Mat4 a = paired_so4(Eigen::Vector4d(rng.normal_vector(4)),
                              Eigen::Vector4d(rng.normal_vector(4)));
    CHECK((a.transpose() * a - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    // the exact pairing relations pin the orientation
    CHECK(a.determinant() == doctest::Approx(-1.0).epsilon(1e-10));
    // pairing relations hold exactly
    CHECK(a(2, 0) == -a(0, 1));
    CHECK(a(2, 1) == a(0, 0));
    CHECK(a(2, 2) == -a(0, 3));
    CHECK(a(2, 3) == a(0, 2));
    CHECK(a(3, 0) == -a(1, 1));
    CHECK(a(3, 1) == a(1, 0));
    CHECK(a(3, 2) == -a(1, 3));
    CHECK(a(3, 3) == a(1, 2));
  }
}

TEST_CASE("five-curvature chain forces the exact margin") {
  SampleRng rng(509);
  for (int s = 0; s < 25; ++s) {
    const CaseICoefficients c = random_case1_coefficients(rng);
    const Report r = case1_chain(c);
    CHECK(r.margin == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // mu is forced to zero whenever (k, l) != 0
    bool saw_mu = false;
    for (const auto& f : r.chain)
      if (f.name == "mu") {
        saw_mu = true;
        CHECK(f.value == 0.0);
      }
    CHECK(saw_mu);
  }

  CaseICoefficients bad = random_case1_coefficients(rng);
  bad.mu = bad.lambda;  // collides with the paired spectrum
  CHECK_THROWS_AS(case1_chain(bad), std::invalid_argument);
}

TEST_CASE("mu-forcing subcases report the rejected mu") {
  CHECK(case2_case4_chain("4ii", 0.0, 0.0, 0.6).margin == doctest::Approx(0.6));
  CHECK(case2_case4_chain("2i", 0.9, 0.5, 0.9).margin == doctest::Approx(0.9));
  CHECK(case2_case4_chain("2ii", 0.0, 0.5, 1.3).margin == doctest::Approx(1.3));
  CHECK(case2_case4_chain("3i", 0.0, 0.7, -0.7).margin == doctest::Approx(0.7));
  CHECK(case2_case4_chain("4i", 0.8, 0.8, -0.8).margin == doctest::Approx(0.8));
  // mu = 0 fits no subcase
  CHECK_THROWS_AS(case2_case4_chain("4ii", 0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(case2_case4_chain("2i", 0.9, 0.5, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(case2_case4_chain("weird", 1, 1, 1), std::invalid_argument);
}

TEST_CASE("three-curvature interior case margins") {
  const Report r = case3ii_margin();
  CHECK(r.margin == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  bool saw_beta = false, saw_sum = false;
  for (const auto& f : r.chain) {
    if (f.name == "beta") {
      saw_beta = true;
      CHECK(f.value == doctest::Approx(std::sqrt(6.0) / 6.0).epsilon(1e-15));
    }
    if (f.name == "lambda^2+beta^2") {
      saw_sum = true;
      CHECK(f.value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }
  }
  CHECK(saw_beta);
  CHECK(saw_sum);
}

TEST_CASE("equal-pair case branch margins") {
  CaseIIIData d;
  const double s = std::sqrt(0.5);
  d.a11 = s * std::cos(1.1);
  d.a12 = s * std::sin(1.1);
  d.a13 = s * std::cos(0.2);
  d.a14 = s * std::sin(0.2);
  const Report r = case3iii_branch_margins(d);
  REQUIRE(r.margins.size() == 2);
  CHECK(r.margins[0] == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-15));
  CHECK(r.margins[1] == doctest::Approx(2.0 * std::sqrt(2.0) / std::sqrt(3.0)).epsilon(1e-15));
  for (const auto& f : r.chain)
    if (f.name == "lambda")
      CHECK(f.value == doctest::Approx(std::sqrt(3.0) / 6.0).epsilon(1e-15));

  CaseIIIData bad = d;
  bad.a11 = 1.0;
  CHECK_THROWS_AS(case3iii_branch_margins(bad), std::invalid_argument);
}

TEST_CASE("dimension-two margin") {
  CHECK(dim2_margin(0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(dim2_margin(1.0) == doctest::Approx(13.0 / 6.0).epsilon(1e-15));
  CHECK(dim2_margin(-2.0) == doctest::Approx(8.0 + 1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("feasibility scans respect the analytic margins") {
  for (const std::string& id : case_ids()) {
    const Report r = feasibility_scan(id, 40, 30);
    REQUIRE(r.scan.has_value());
    CHECK(r.scan->min > 0.0);
    CHECK(r.scan->min >= 0.99 * r.scan->analytic_at_argmin);
    if (id == "case1") CHECK(r.scan->min == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    if (id == "case3ii") CHECK(r.scan->min == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
    if (id == "dim2") CHECK(r.scan->min == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(feasibility_scan("nope", 10, 5), std::invalid_argument);
}

TEST_CASE("feasibility scans are deterministic") {
  for (const std::string& id : {"s6-nu3", "dim2", "case3iii"}) {
    const Report a = feasibility_scan(id, 25, 20);
    const Report b = feasibility_scan(id, 25, 20);
    CHECK(a.scan->min == b.scan->min);
    REQUIRE(a.scan->argmin.size() == b.scan->argmin.size());
    for (size_t i = 0; i < a.scan->argmin.size(); ++i)
      CHECK(a.scan->argmin[i] == b.scan->argmin[i]);
  }
}

TEST_CASE("scan minima for the tube cases stay strictly positive") {
  const Report nu3 = feasibility_scan("s6-nu3", 100, 50);
  CHECK(nu3.scan->min > 0.0);
  const Report nu2 = feasibility_scan("s6-nu2", 100, 50);
  CHECK(nu2.scan->min > 0.0);
  MESSAGE("s6-nu3 scan min: ", nu3.scan->min, ", s6-nu2 scan min: ", nu2.scan->min);
}
