#pragma once

#include <optional>
#include <string>

#include "nklab/hypersurface.hpp"

namespace nk::cat {

// Expected per-entry properties, asserted by the surface suite.
struct Expected {
  std::optional<double> commutator_tol;      // ||A phi - phi A||_F
  std::optional<double> anticommutator_tol;  // ||A phi + phi A||_F
  std::optional<double> shape_norm_tol;      // ||A||_F (totally geodesic)
  std::optional<double> umbilic_tol;         // eigenvalue spread
  double codazzi_tol = 1e-3;
};

struct Entry {
  hyp::Immersion immersion;
  Expected expected;
};

// S^3 x S^2 -> S^3 x S^3, (x, y) -> (x, y); S^2 realized as the unit
// imaginary quaternions.
Entry f1();
// (x, y) -> (y, x)
Entry f2();
// (x, y) -> (conj(x), y conj(x))
Entry f3();

// totally geodesic equator S^5 in S^6
Entry equator_s5();
// distance sphere of radius r in S^6 (0 < r < pi); umbilical
Entry geodesic_sphere_s6(double r);

// "f1" | "f2" | "f3" | "equator" | "sphere:<r>"
Entry by_name(const std::string& name);

}  // namespace nk::cat
