#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nklab/linalg.hpp"
#include "nklab/rng.hpp"

namespace nk::obs {

// Each case of the pointwise analysis produces a chain of values forced by
// the structure equations, ending in a strictly positive infeasibility
// margin: the distance between what the system forces and what the case
// assumes. A grid scan over the case's parameter domain corroborates the
// closed-form margin.

struct ForcedValue {
  std::string name;
  double value = 0.0;
  std::string reason;
};

struct ScanResult {
  int grid = 0;
  int refine = 0;
  double min = 0.0;
  std::vector<double> argmin;
  double analytic_at_argmin = 0.0;
};

struct Report {
  std::string case_id;
  std::string subcase;
  std::vector<ForcedValue> chain;
  std::vector<std::pair<std::string, double>> derived;
  std::vector<double> margins;
  double margin = 0.0;  // min of margins
  std::optional<ScanResult> scan;
};

// ---------------------------------------------------------------------------
// The pointwise Hopf relation in matrix form (zero right side, as on S^6):
// | g((mu I - A) Gxi X, Y) + g(Gxi (mu I - A) X, Y)
//   - mu g((A phi + phi A) X, Y) + 2 g(A phi A X, Y) |.
// Gxi columns are frame coordinates of G(E_j, xi).
double hopf_relation_residual(const Mat5& A, const Mat5& phi, const Mat5& Gxi,
                              double mu, const Vec5& X, const Vec5& Y);

// ---------------------------------------------------------------------------
// S^6 tube cases. Principal curvatures of a tube of radius r around an almost
// complex curve: tan(theta + r), tan(theta - r) and -cot r (the latter also
// on U), theta in [0, pi/2).

struct S6TubeProfile {
  double theta = 0.0;
  double r = 0.0;

  double k_plus() const;   // tan(theta + r)
  double k_minus() const;  // tan(theta - r)
  double k_u() const;      // -cot r
  // throws std::domain_error on range/pole violations
  void validate(double pole_tol = 1e-6) const;
};

// Three-distinct-curvature case: the relation forces both tilt curvatures to
// vanish while they must stay distinct. Returns max(|tan(theta+r)|,
// |tan(theta-r)|).
double s6_case1_margin(double theta, double r, double distinct_tol = 1e-3);

// Two-distinct-curvature case: requires the merge constraint (the tilt
// curvature tan(theta-r) coincides with -cot r, or r = pi/2 where the two
// tilt curvatures merge). Returns the max |.| of the two distinct values,
// both forced to vanish.
double s6_case2_margin(double theta, double r, double constraint_tol = 1e-8);

// ---------------------------------------------------------------------------
// S^3 x S^3 cases (distribution dimension 4).

// Frame-change coefficients for the five-distinct-curvature case. The 4x4
// matrix rows satisfy row3 = T row1, row4 = T row2 with
// T(x1,x2,x3,x4) = (-x2, x1, -x4, x3), exactly by construction.
struct CaseICoefficients {
  Mat4 a = Mat4::Identity();
  double fa = 0.0, fb = 0.0, fc = 1.0;  // frame scalars with fa^2+fb^2+fc^2 = 1
  double k = 0.0, l = 0.0;              // k^2 + l^2 = 1/3
  double lambda = 1.0, beta = 0.5, mu = 0.2;
  Eigen::Matrix<double, 5, 5> gamma5 = Eigen::Matrix<double, 5, 5>::Zero();  // Gamma^k_{5j}, skew

  void validate() const;  // throws on constraint violations
};

// Orthogonal 4x4 with the pairing relations built in exactly. The relations
// pin the orientation (det = -1 identically on the constraint set); the case
// eliminations use only orthogonality.
Mat4 paired_so4(const Eigen::Vector4d& r1_raw, const Eigen::Vector4d& r2_raw);

CaseICoefficients random_case1_coefficients(SampleRng& rng);

Report case1_chain(const CaseICoefficients& c);

// Subcases with mu != 0 forced to mu = 0: "2i", "2ii", "3i", "4i", "4ii".
Report case2_case4_chain(const std::string& subcase, double lambda, double beta,
                         double mu);

Report case3ii_margin();

struct CaseIIIData {
  double a11 = 0.0, a12 = 0.0;  // a11^2 + a12^2 = 1/2
  double a13 = 0.0, a14 = 0.0;  // a13^2 + a14^2 = 1/2
  double gamma121 = 0.0;

  double m() const;  // -(2 sqrt6 / 3) a13 a14
  double n() const;  // (sqrt6 / 3)(a14^2 - a13^2)
  void validate() const;
};

Report case3iii_branch_margins(const CaseIIIData& d);

// |2 lambda^2 + 1/6|, minimized at lambda = 0 with value 1/6.
double dim2_margin(double lambda);

// Deterministic grid + shrinking coordinate-descent scan of the case's
// residual over its compact parameter domain. Known ids: s6-nu3, s6-nu2,
// case1, case2, case3i, case3ii, case3iii, case4, dim2.
Report feasibility_scan(const std::string& case_id, int grid = 100, int refine = 50);

const std::vector<std::string>& case_ids();

}  // namespace nk::obs
