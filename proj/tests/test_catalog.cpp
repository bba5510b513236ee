#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nklab/catalog.hpp"
#include "nklab/quat.hpp"
#include "nklab/rng.hpp"

using namespace nk;
using namespace nk::cat;

TEST_CASE("f1/f2/f3 image points lie on S^3 x S^3") {
  for (const Entry& e : {f1(), f2(), f3()}) {
    for (int s = 0; s < 10; ++s) {
      const hyp::Params u = e.immersion.random_interior(401, s, 0.0);
      const AVec P = e.immersion.map(u);
      CHECK(std::abs(P.head<4>().norm() - 1.0) < 1e-12);
      CHECK(std::abs(P.tail<4>().norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("f2 swaps the factors of f1") {
  const Entry a = f1(), b = f2();
  for (int s = 0; s < 10; ++s) {
    const hyp::Params u = a.immersion.random_interior(403, s, 0.0);
    const AVec pa = a.immersion.map(u), pb = b.immersion.map(u);
    CHECK((pa.head<4>() - pb.tail<4>()).norm() == 0.0);
    CHECK((pa.tail<4>() - pb.head<4>()).norm() == 0.0);
  }
}

TEST_CASE("f3 evaluates the conjugation formula") {
  // at (x, y) = (1, i) the image is (1, i)
  const Entry e = f3();
  hyp::Params u = hyp::Params::Zero();
  u[3] = M_PI / 2;  // colatitude pi/2, longitude 0 -> y = i
  u[4] = 0.0;
  const AVec P = e.immersion.map(u);
  AVec want(8);
  want << 1, 0, 0, 0, 0, 1, 0, 0;
  CHECK((P - want).norm() < 1e-15);

  // second factor stays unit: |y conj(x)| = 1
  for (int s = 0; s < 10; ++s) {
    const hyp::Params up = e.immersion.random_interior(407, s, 0.0);
    CHECK(std::abs(e.immersion.map(up).tail<4>().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("catalog immersions are rank 5 across their boxes") {
  for (const Entry& e : {f1(), f2(), f3(), equator_s5(), geodesic_sphere_s6(1.0)}) {
    for (int s = 0; s < 5; ++s) {
      const hyp::Params u = e.immersion.random_interior(409, s, 0.02);
      const hyp::Sample smp = hyp::sample(e.immersion, u);
      CHECK(smp.frame_gram_det > 1e-8);
    }
  }
}

TEST_CASE("geodesic sphere radius validation") {
  CHECK_THROWS_AS(geodesic_sphere_s6(0.0), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_sphere_s6(M_PI), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_sphere_s6(-1.0), std::invalid_argument);
}

TEST_CASE("catalog lookup by name") {
  CHECK(by_name("f1").immersion.name == "f1");
  CHECK(by_name("equator").immersion.name == "equator");
  CHECK(by_name("sphere:1.0471975512").immersion.name == "sphere");
  CHECK_THROWS_AS(by_name("nope"), std::invalid_argument);
  CHECK_THROWS_AS(by_name("sphere:abc"), std::invalid_argument);
  CHECK_THROWS_AS(by_name("sphere:1.0x"), std::invalid_argument);
  CHECK_THROWS_AS(by_name("sphere:9.0"), std::invalid_argument);
}
