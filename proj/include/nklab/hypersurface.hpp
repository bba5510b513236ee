#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "nklab/ambient.hpp"
#include "nklab/linalg.hpp"

namespace nk::hyp {

using Params = Vec5;

// A 5-parameter immersion into one of the two ambient manifolds. `map` must
// send parameter-box points onto the manifold exactly (up to rounding).
struct Immersion {
  std::string name;
  const Ambient* ambient = nullptr;
  std::array<std::pair<double, double>, 5> box{};
  std::function<AVec(const Params&)> map;

  Params clamp_interior(const Params& u, double margin) const;
  Params random_interior(uint64_t master_seed, uint64_t index, double margin) const;
};

// Per-point hypersurface data: orthonormal tangent frame, unit normal, shape
// operator, induced almost contact structure.
struct Sample {
  const Ambient* ambient = nullptr;
  Params u;
  AVec P;
  std::array<AVec, 5> dF;   // pushforward of the parameter frame
  std::array<AVec, 5> E;    // g-orthonormal frame
  Mat5 gs;                  // E_i = sum_a gs(a, i) dF_a
  AVec xi;                  // unit normal, orientation-normalized
  Mat5 A;                   // shape operator in E (A X = -(nabla_X xi)^T)
  Mat5 phi;                 // tangential part of J in E
  Vec5 U;                   // frame coordinates of -J xi
  Vec5 f;                   // contact 1-form (equals U in an orthonormal frame)
  double frame_gram_det = 0.0;
  BasisHint hint;

  AVec tangential(const AVec& w) const;
  AVec from_frame(const Vec5& c) const;
  Vec5 to_frame(const AVec& w) const;
  AVec apply_A(const AVec& w) const;
  AVec apply_phi_amb(const AVec& w) const;  // J w - g(w, U) xi
  AVec U_ambient() const { return from_frame(U); }
};

struct SampleOptions {
  FdSteps steps{};
  bool flip_normal = false;
  // When set, the normal sign is aligned with this reference instead of the
  // orientation rule (used on finite-difference stencils).
  const AVec* align_normal = nullptr;
  const BasisHint* hint = nullptr;
};

Sample sample(const Immersion& imm, const Params& u, const SampleOptions& opts = {});

// max residuals of the almost contact relations f(phi X) = 0,
// phi^2 = -I + f (x) U, g(phi X, Y) = -g(X, phi Y) over the frame
double contact_structure_residual(const Sample& s);

// || (nabla_X A)Y - (nabla_Y A)X - rhs ||_g with the ambient-specific Codazzi
// right side (product-structure terms on S^3 x S^3, zero on S^6).
double codazzi_residual(const Immersion& imm, const Params& u, const Vec5& X,
                        const Vec5& Y, const SampleOptions& opts = {});

// Intrinsic curvature of the induced metric vs the Gauss-equation right side.
double gauss_residual(const Immersion& imm, const Params& u, const Vec5& X,
                      const Vec5& Y, const Vec5& Z, const SampleOptions& opts = {});

// || nabla_X U - phi A X + G(X, xi) ||_g
double contact_derivative_residual(const Immersion& imm, const Params& u,
                                   const Vec5& X, const SampleOptions& opts = {});

// ||A U - mu U||_g with mu = g(AU, U)/g(U, U); zero iff U is principal.
double hopf_defect(const Sample& s);

// (||A phi - phi A||_F, ||A phi + phi A||_F)
std::pair<double, double> commutator_norms(const Sample& s);

// The pointwise identity satisfied by every Hopf hypersurface, assembled
// from A, phi, G and (on S^3 x S^3) the product structure. X, Y must be
// g-orthogonal to U on S^3 x S^3. Requires hopf_defect(s) <= hopf_tol.
double hopf_identity_residual(const Sample& s, const Vec5& X, const Vec5& Y,
                              double h = 1e-4, double hopf_tol = 1e-4);

struct PrincipalProfile {
  Vec5 eigenvalues;  // descending
  double mu = 0.0;
  int nu = 0;        // distinct eigenvalues at tolerance
  bool paired = false;
  double lambda = 0.0, beta = 0.0;  // nonnegative representatives when paired
};

PrincipalProfile principal_profile(const Sample& s, double distinct_tol = 1e-4,
                                   double pair_tol = 1e-3);

// Canonical frame adapted to the distribution spanned by xi, U, P xi, P U
// (S^3 x S^3 only).
struct CanonicalFrame {
  enum class Status { Dim4, Dim2, Ambiguous };
  Status status = Status::Ambiguous;
  int dim = 0;
  double a = 0.0, b = 0.0, c = 0.0;
  std::array<AVec, 5> e;  // e5 = U
  Eigen::Vector4d gram_eigenvalues;
};

CanonicalFrame distribution_d(const Sample& s, double rank_tol = 1e-6);

}  // namespace nk::hyp
