#include "nklab/hypersurface.hpp"

#include <cmath>
#include <stdexcept>

#include "nklab/fdgeom.hpp"
#include "nklab/rng.hpp"

namespace nk::hyp {

namespace {

std::array<AVec, 5> frame_fd(const Immersion& imm, const Params& u, double h) {
  const AVec P = imm.map(u);
  std::array<AVec, 5> dF;
  for (int a = 0; a < 5; ++a) {
    Params up = u, um = u;
    up[a] += h;
    um[a] -= h;
    const AVec d = (imm.map(up) - imm.map(um)) / (2.0 * h);
    dF[a] = imm.ambient->project_tangent(P, d);
  }
  return dF;
}

struct NormalData {
  AVec P;
  std::array<AVec, 5> dF;
  std::array<AVec, 5> E;
  Mat5 gs;
  AVec xi;
  double gram_det = 0.0;
};

// Gram-Schmidt under the ambient metric, tracking E_i = sum_a gs(a,i) dF_a.
void gram_schmidt(const Ambient& amb, NormalData& d) {
  Mat5 gram;
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      gram(i, j) = amb.metric(d.P, d.dF[i], d.dF[j]);
      gram(j, i) = gram(i, j);
    }
  d.gram_det = gram.determinant();
  if (d.gram_det < 1e-8) throw std::domain_error("immersion frame rank-deficient");

  d.gs.setZero();
  for (int i = 0; i < 5; ++i) {
    AVec v = d.dF[i];
    Vec5 coeff = Vec5::Zero();
    coeff[i] = 1.0;
    for (int j = 0; j < i; ++j) {
      const double c = amb.metric(d.P, d.dF[i], d.E[j]);
      v -= c * d.E[j];
      coeff -= c * d.gs.col(j);
    }
    const double r = amb.g_norm(d.P, v);
    d.E[i] = v / r;
    d.gs.col(i) = coeff / r;
  }
}

// Unit normal with the deterministic orientation rule: the coefficient matrix
// of (E1..E5, xi) in the ambient tangent basis has positive determinant. On
// finite-difference stencils the sign is aligned with the center normal
// instead.
void compute_normal(const Ambient& amb, NormalData& d, const BasisHint& hint,
                    const AVec* align) {
  const auto basis = amb.tangent_basis(d.P, hint);

  AVec best;
  double best_norm = -1.0;
  for (const AVec& bvec : basis) {
    AVec r = bvec;
    for (int j = 0; j < 5; ++j) r -= amb.metric(d.P, r, d.E[j]) * d.E[j];
    const double n = amb.g_norm(d.P, r);
    if (n > best_norm) {
      best_norm = n;
      best = r;
    }
  }
  if (best_norm < 1e-6) throw std::domain_error("normal extraction degenerate");
  d.xi = best / best_norm;

  if (align != nullptr) {
    if (d.xi.dot(*align) < 0.0) d.xi = -d.xi;
    return;
  }

  Mat6 bg, comp;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      bg(i, j) = amb.metric(d.P, basis[i], basis[j]);
      bg(j, i) = bg(i, j);
    }
  const auto solver = bg.ldlt();
  for (int col = 0; col < 6; ++col) {
    const AVec& w = col < 5 ? d.E[col] : d.xi;
    Vec6 rhs;
    for (int i = 0; i < 6; ++i) rhs[i] = amb.metric(d.P, basis[i], w);
    comp.col(col) = solver.solve(rhs);
  }
  if (comp.determinant() < 0.0) d.xi = -d.xi;
}

NormalData normal_data(const Immersion& imm, const Params& u, double h,
                       const BasisHint& hint, const AVec* align) {
  NormalData d;
  d.P = imm.ambient->normalize_point(imm.map(u));
  d.dF = frame_fd(imm, u, h);
  gram_schmidt(*imm.ambient, d);
  compute_normal(*imm.ambient, d, hint, align);
  return d;
}

}  // namespace

Params Immersion::clamp_interior(const Params& u, double margin) const {
  Params out = u;
  for (int i = 0; i < 5; ++i) {
    const double lo = box[i].first + margin, hi = box[i].second - margin;
    out[i] = std::min(std::max(out[i], lo), hi);
  }
  return out;
}

Params Immersion::random_interior(uint64_t master_seed, uint64_t index,
                                  double margin) const {
  SampleRng rng(master_seed, index);
  Params u;
  for (int i = 0; i < 5; ++i)
    u[i] = rng.uniform(box[i].first + margin, box[i].second - margin);
  return u;
}

AVec Sample::tangential(const AVec& w) const {
  AVec out = AVec::Zero(w.size());
  for (int i = 0; i < 5; ++i) out += ambient->metric(P, w, E[i]) * E[i];
  return out;
}

AVec Sample::from_frame(const Vec5& c) const {
  AVec out = AVec::Zero(P.size());
  for (int i = 0; i < 5; ++i) out += c[i] * E[i];
  return out;
}

Vec5 Sample::to_frame(const AVec& w) const {
  Vec5 c;
  for (int i = 0; i < 5; ++i) c[i] = ambient->metric(P, w, E[i]);
  return c;
}

AVec Sample::apply_A(const AVec& w) const { return from_frame(A * to_frame(w)); }

AVec Sample::apply_phi_amb(const AVec& w) const {
  const AVec jw = ambient->almost_complex(P, w);
  return jw - ambient->metric(P, w, U_ambient()) * xi;
}

Sample sample(const Immersion& imm, const Params& u, const SampleOptions& opts) {
  const Ambient& amb = *imm.ambient;
  Sample s;
  s.ambient = &amb;
  s.u = u;
  s.hint = opts.hint != nullptr ? *opts.hint
                                : amb.basis_hint(amb.normalize_point(imm.map(u)));

  NormalData d = normal_data(imm, u, opts.steps.h1, s.hint, opts.align_normal);
  if (opts.flip_normal) d.xi = -d.xi;
  s.P = d.P;
  s.dF = d.dF;
  s.E = d.E;
  s.gs = d.gs;
  s.xi = d.xi;
  s.frame_gram_det = d.gram_det;

  // Weingarten: A over the parameter frame, then change of basis into E
  const auto conn = amb.connection(s.P);
  Mat5 cols;
  for (int a = 0; a < 5; ++a) {
    Params dir = Params::Zero();
    dir[a] = 1.0;
    auto curve = [&](double t) -> AVec {
      return amb.normalize_point(imm.map(u + t * dir));
    };
    auto field = [&](double t) -> AVec {
      if (t == 0.0) return s.xi;
      return normal_data(imm, u + t * dir, opts.steps.h1, s.hint, &s.xi).xi;
    };
    const AVec dxi = conn->derivative(curve, field, opts.steps.h1);
    for (int j = 0; j < 5; ++j) cols(j, a) = -amb.metric(s.P, dxi, s.E[j]);
  }
  s.A = cols * s.gs;

  const AVec U_amb = -amb.almost_complex(s.P, s.xi);
  for (int i = 0; i < 5; ++i) {
    s.U[i] = amb.metric(s.P, U_amb, s.E[i]);
    for (int j = 0; j < 5; ++j)
      s.phi(i, j) = amb.metric(s.P, amb.almost_complex(s.P, s.E[j]), s.E[i]);
  }
  s.f = s.U;
  return s;
}

double contact_structure_residual(const Sample& s) {
  double worst = 0.0;
  const Mat5 phi2 = s.phi * s.phi;
  const Mat5 expect = -Mat5::Identity() + s.U * s.f.transpose();
  worst = std::max(worst, (phi2 - expect).cwiseAbs().maxCoeff());
  worst = std::max(worst, (s.phi + s.phi.transpose()).cwiseAbs().maxCoeff());
  worst = std::max(worst, (s.f.transpose() * s.phi).cwiseAbs().maxCoeff());
  worst = std::max(worst, std::abs(s.U.squaredNorm() - 1.0));
  return worst;
}

namespace {

// Codazzi right side of the structure equations; zero on S^6.
AVec codazzi_rhs(const Sample& s, const AVec& X, const AVec& Y) {
  const Ambient& amb = *s.ambient;
  if (!amb.has_product_structure()) return AVec::Zero(s.P.size());
  const AVec U_amb = s.U_ambient();
  const AVec phiX = s.apply_phi_amb(X), phiY = s.apply_phi_amb(Y);
  const AVec PX = amb.product_structure(s.P, X), PY = amb.product_structure(s.P, Y);
  const AVec JPX = amb.almost_complex(s.P, PX), JPY = amb.almost_complex(s.P, PY);
  auto g = [&](const AVec& a, const AVec& b) { return amb.metric(s.P, a, b); };

  AVec rhs = (1.0 / 12.0) *
             (g(X, U_amb) * phiY - g(Y, U_amb) * phiX - 2.0 * g(phiX, Y) * U_amb);
  rhs += (1.0 / 3.0) *
         (g(PX, s.xi) * s.tangential(PY) - g(PY, s.xi) * s.tangential(PX) +
          g(PX, U_amb) * s.tangential(JPY) - g(PY, U_amb) * s.tangential(JPX));
  return rhs;
}

// (nabla_X A)Y at the center point, X and Y constant-coefficient coordinate
// extensions.
AVec nabla_A(const Immersion& imm, const Params& u, const Sample& s0,
             const AmbientConnection& conn, const Vec5& Xc, const Vec5& Yc,
             const SampleOptions& opts) {
  const Ambient& amb = *imm.ambient;
  Params dir = Params::Zero();
  for (int a = 0; a < 5; ++a) dir[a] = Xc[a];

  auto curve = [&](double t) -> AVec {
    return amb.normalize_point(imm.map(u + t * dir));
  };
  auto y_ext = [&](double t) -> AVec {
    const auto& dF = (t == 0.0) ? s0.dF : frame_fd(imm, u + t * dir, opts.steps.h1);
    AVec out = AVec::Zero(s0.P.size());
    for (int a = 0; a < 5; ++a) out += Yc[a] * dF[a];
    return out;
  };
  auto a_of_y = [&](double t) -> AVec {
    if (t == 0.0) return s0.apply_A(y_ext(0.0));
    SampleOptions so = opts;
    so.hint = &s0.hint;
    so.align_normal = &s0.xi;
    so.flip_normal = false;
    const Sample st = sample(imm, u + t * dir, so);
    return st.apply_A(y_ext(t));
  };

  const AVec d_ay = s0.tangential(conn.derivative(curve, a_of_y, opts.steps.h2));
  const AVec d_y = s0.tangential(conn.derivative(curve, y_ext, opts.steps.h1));
  return d_ay - s0.apply_A(d_y);
}

}  // namespace

double codazzi_residual(const Immersion& imm, const Params& u, const Vec5& X,
                        const Vec5& Y, const SampleOptions& opts) {
  const Ambient& amb = *imm.ambient;
  const Sample s0 = sample(imm, u, opts);
  const auto conn = amb.connection(s0.P);

  const AVec xy = nabla_A(imm, u, s0, *conn, X, Y, opts);
  const AVec yx = nabla_A(imm, u, s0, *conn, Y, X, opts);

  AVec X_amb = AVec::Zero(s0.P.size()), Y_amb = AVec::Zero(s0.P.size());
  for (int a = 0; a < 5; ++a) {
    X_amb += X[a] * s0.dF[a];
    Y_amb += Y[a] * s0.dF[a];
  }
  const AVec rhs = codazzi_rhs(s0, X_amb, Y_amb);
  return amb.g_norm(s0.P, xy - yx - rhs);
}

double gauss_residual(const Immersion& imm, const Params& u, const Vec5& X,
                      const Vec5& Y, const Vec5& Z, const SampleOptions& opts) {
  const Ambient& amb = *imm.ambient;
  const Sample s0 = sample(imm, u, opts);

  fd::MetricFn induced = [&](const Eigen::VectorXd& up) -> Eigen::MatrixXd {
    const Params pu = Params(up);
    const AVec P = amb.normalize_point(imm.map(pu));
    const auto dF = frame_fd(imm, pu, opts.steps.h1);
    Eigen::MatrixXd g(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        g(i, j) = amb.metric(P, dF[i], dF[j]);
        g(j, i) = g(i, j);
      }
    return g;
  };
  const fd::Riemann rm = fd::riemann(induced, u, opts.steps.h1, opts.steps.h2);
  const Eigen::VectorXd lhs_coords = fd::riemann_apply(rm, X, Y, Z);
  AVec lhs = AVec::Zero(s0.P.size());
  for (int a = 0; a < 5; ++a) lhs += lhs_coords[a] * s0.dF[a];

  AVec X_amb = AVec::Zero(s0.P.size()), Y_amb = AVec::Zero(s0.P.size()),
       Z_amb = AVec::Zero(s0.P.size());
  for (int a = 0; a < 5; ++a) {
    X_amb += X[a] * s0.dF[a];
    Y_amb += Y[a] * s0.dF[a];
    Z_amb += Z[a] * s0.dF[a];
  }
  auto g = [&](const AVec& a, const AVec& b) { return amb.metric(s0.P, a, b); };

  AVec rhs;
  const AVec AX = s0.apply_A(X_amb), AY = s0.apply_A(Y_amb), AZ = s0.apply_A(Z_amb);
  if (amb.has_product_structure()) {
    const AVec phiX = s0.apply_phi_amb(X_amb), phiY = s0.apply_phi_amb(Y_amb),
               phiZ = s0.apply_phi_amb(Z_amb);
    const AVec PX = amb.product_structure(s0.P, X_amb),
               PY = amb.product_structure(s0.P, Y_amb);
    const AVec JPX = amb.almost_complex(s0.P, PX), JPY = amb.almost_complex(s0.P, PY);
    rhs = (5.0 / 12.0) * (g(Y_amb, Z_amb) * X_amb - g(X_amb, Z_amb) * Y_amb);
    rhs += (1.0 / 12.0) * (g(phiY, Z_amb) * phiX - g(phiX, Z_amb) * phiY -
                           2.0 * g(phiX, Y_amb) * phiZ);
    rhs += (1.0 / 3.0) *
           (g(PY, Z_amb) * s0.tangential(PX) - g(PX, Z_amb) * s0.tangential(PY) +
            g(JPY, Z_amb) * s0.tangential(JPX) - g(JPX, Z_amb) * s0.tangential(JPY));
  } else {
    rhs = g(Y_amb, Z_amb) * X_amb - g(X_amb, Z_amb) * Y_amb;
  }
  rhs += g(AZ, Y_amb) * AX - g(AZ, X_amb) * AY;
  return amb.g_norm(s0.P, lhs - rhs);
}

double contact_derivative_residual(const Immersion& imm, const Params& u,
                                   const Vec5& X, const SampleOptions& opts) {
  const Ambient& amb = *imm.ambient;
  const Sample s0 = sample(imm, u, opts);
  const auto conn = amb.connection(s0.P);
  Params dir = Params::Zero();
  for (int a = 0; a < 5; ++a) dir[a] = X[a];

  auto curve = [&](double t) -> AVec {
    return amb.normalize_point(imm.map(u + t * dir));
  };
  auto u_field = [&](double t) -> AVec {
    if (t == 0.0) return s0.U_ambient();
    const NormalData d = normal_data(imm, u + t * dir, opts.steps.h1, s0.hint, &s0.xi);
    return -amb.almost_complex(d.P, d.xi);
  };
  const AVec dU = s0.tangential(conn->derivative(curve, u_field, opts.steps.h1));

  AVec X_amb = AVec::Zero(s0.P.size());
  for (int a = 0; a < 5; ++a) X_amb += X[a] * s0.dF[a];
  const AVec phiAX = s0.apply_phi_amb(s0.apply_A(X_amb));
  const AVec G_X_xi = amb.g_tensor(s0.P, X_amb, s0.xi, opts.steps.h1);
  return amb.g_norm(s0.P, dU - phiAX + G_X_xi);
}

double hopf_defect(const Sample& s) {
  const double un2 = s.U.squaredNorm();
  if (un2 < 1e-16) throw std::domain_error("hopf_defect: degenerate structure vector");
  const double mu = s.U.dot(s.A * s.U) / un2;
  return (s.A * s.U - mu * s.U).norm();
}

std::pair<double, double> commutator_norms(const Sample& s) {
  const Mat5 c = s.A * s.phi - s.phi * s.A;
  const Mat5 a = s.A * s.phi + s.phi * s.A;
  return {c.norm(), a.norm()};
}

double hopf_identity_residual(const Sample& s, const Vec5& X, const Vec5& Y,
                              double h, double hopf_tol) {
  const Ambient& amb = *s.ambient;
  if (hopf_defect(s) > hopf_tol)
    throw std::invalid_argument("hopf_identity_residual: sample is not Hopf");
  const bool has_p = amb.has_product_structure();
  if (has_p && (std::abs(X.dot(s.U)) > 1e-8 || std::abs(Y.dot(s.U)) > 1e-8))
    throw std::invalid_argument("hopf_identity_residual: X, Y must be orthogonal to U");

  const double mu = s.U.dot(s.A * s.U) / s.U.squaredNorm();
  const AVec X_amb = s.from_frame(X);

  const Vec5 g_x_xi = s.to_frame(amb.g_tensor(s.P, X_amb, s.xi, h));
  const Vec5 mx = mu * X - s.A * X;
  const Vec5 g_mx_xi = s.to_frame(amb.g_tensor(s.P, s.from_frame(mx), s.xi, h));

  const double t1 = Y.dot(mu * g_x_xi - s.A * g_x_xi);
  const double t2 = Y.dot(g_mx_xi);
  const double t3 = -mu * Y.dot((s.A * s.phi + s.phi * s.A) * X);
  const double t4 = 2.0 * Y.dot(s.A * (s.phi * (s.A * X)));
  const double rhs = t1 + t2 + t3 + t4;

  double lhs = 0.0;
  if (has_p) {
    const AVec Y_amb = s.from_frame(Y);
    const AVec U_amb = s.U_ambient();
    const AVec PX = amb.product_structure(s.P, X_amb);
    const AVec PY = amb.product_structure(s.P, Y_amb);
    auto g = [&](const AVec& a, const AVec& b) { return amb.metric(s.P, a, b); };
    lhs = (1.0 / 6.0) * Y.dot(s.phi * X) -
          (2.0 / 3.0) * (g(PX, s.xi) * g(PY, U_amb) - g(PX, U_amb) * g(PY, s.xi));
  }
  return std::abs(lhs - rhs);
}

PrincipalProfile principal_profile(const Sample& s, double distinct_tol,
                                   double pair_tol) {
  PrincipalProfile p;
  const Mat5 sym = 0.5 * (s.A + s.A.transpose());
  Eigen::SelfAdjointEigenSolver<Mat5> es(sym);
  const Vec5 ev = es.eigenvalues().reverse();
  p.eigenvalues = ev;
  p.mu = s.U.dot(s.A * s.U) / s.U.squaredNorm();

  p.nu = 1;
  for (int i = 1; i < 5; ++i)
    if (ev[i - 1] - ev[i] > distinct_tol) ++p.nu;

  // spectrum on the orthogonal complement of U
  Eigen::Matrix<double, 5, 4> q;
  {
    const Vec5 un = s.U.normalized();
    int col = 0;
    for (int i = 0; i < 5 && col < 4; ++i) {
      Vec5 v = Vec5::Zero();
      v[i] = 1.0;
      v -= un * un.dot(v);
      for (int j = 0; j < col; ++j) v -= q.col(j) * q.col(j).dot(v);
      const double n = v.norm();
      if (n > 1e-6) q.col(col++) = v / n;
    }
    if (col < 4) throw std::runtime_error("principal_profile: U-complement basis failed");
  }
  const Eigen::Matrix4d b = q.transpose() * sym * q;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es4(b);
  const Eigen::Vector4d kappa = es4.eigenvalues();

  // greedy +/- pairing: match the largest remaining value with the one
  // closest to its negative
  std::array<bool, 4> used{};
  std::array<std::pair<double, double>, 2> pairs;
  bool ok = true;
  for (int n = 0; n < 2; ++n) {
    int imax = -1;
    for (int i = 0; i < 4; ++i)
      if (!used[i] && (imax < 0 || kappa[i] > kappa[imax])) imax = i;
    used[imax] = true;
    int jbest = -1;
    double gap = 1e30;
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double diff = std::abs(kappa[imax] + kappa[j]);
      if (diff < gap) {
        gap = diff;
        jbest = j;
      }
    }
    used[jbest] = true;
    if (gap > pair_tol) ok = false;
    pairs[n] = {kappa[imax], kappa[jbest]};
  }
  p.paired = ok;
  if (ok) {
    const double r0 = 0.5 * (pairs[0].first - pairs[0].second);
    const double r1 = 0.5 * (pairs[1].first - pairs[1].second);
    p.lambda = std::max(r0, r1);
    p.beta = std::min(r0, r1);
  }
  return p;
}

namespace {

// sign normalization: first coordinate above threshold is made positive
AVec normalize_sign(const AVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > 1e-10) return v[i] > 0 ? v : AVec(-v);
  return v;
}

// greedy orthonormal completion of `fixed` inside the ambient tangent space
template <size_t N>
std::array<AVec, N> complement(const Ambient& amb, const AVec& P, const BasisHint& hint,
                               const std::vector<AVec>& fixed) {
  const auto basis = amb.tangent_basis(P, hint);
  std::array<AVec, N> comp;
  size_t found = 0;
  std::array<bool, 6> taken{};
  for (size_t n = 0; n < N; ++n) {
    double best = -1.0;
    int bi = -1;
    AVec bv;
    for (int i = 0; i < 6; ++i) {
      if (taken[i]) continue;
      AVec v = basis[i];
      for (const AVec& w : fixed) v -= amb.metric(P, v, w) * w;
      for (size_t j = 0; j < found; ++j) v -= amb.metric(P, v, comp[j]) * comp[j];
      const double nn = amb.g_norm(P, v);
      if (nn > best) {
        best = nn;
        bi = i;
        bv = v;
      }
    }
    if (best < 1e-6) throw std::runtime_error("orthogonal complement degenerate");
    taken[bi] = true;
    comp[found++] = bv / best;
  }
  return comp;
}

}  // namespace

CanonicalFrame distribution_d(const Sample& s, double rank_tol) {
  const Ambient& amb = *s.ambient;
  if (!amb.has_product_structure())
    throw std::logic_error("distribution_d requires the product structure");

  CanonicalFrame cf;
  const AVec U_amb = s.U_ambient();
  const AVec Pxi = amb.product_structure(s.P, s.xi);
  const AVec PU = amb.product_structure(s.P, U_amb);
  auto g = [&](const AVec& a, const AVec& b) { return amb.metric(s.P, a, b); };

  const std::array<AVec, 4> span{s.xi, U_amb, Pxi, PU};
  Eigen::Matrix4d gram;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = g(span[i], span[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(gram);
  cf.gram_eigenvalues = es.eigenvalues();
  int rank = 0;
  for (int i = 0; i < 4; ++i)
    if (cf.gram_eigenvalues[i] > rank_tol) ++rank;

  cf.a = g(Pxi, s.xi);
  cf.b = g(Pxi, U_amb);

  if (rank == 4) {
    cf.status = CanonicalFrame::Status::Dim4;
    cf.dim = 4;
    const AVec r = Pxi - cf.a * s.xi - cf.b * U_amb;
    cf.c = amb.g_norm(s.P, r);
    const AVec e1 = r / cf.c;
    const AVec e2 = amb.almost_complex(s.P, e1);

    // P acts on the 2-dimensional complement of span{xi, U, e1, e2} with
    // one +1 and one -1 eigendirection; e3 is the +1 direction
    const auto comp = complement<2>(amb, s.P, s.hint, {s.xi, U_amb, e1, e2});
    Eigen::Matrix2d pm;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        pm(i, j) = g(amb.product_structure(s.P, comp[j]), comp[i]);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es2(pm);
    const int plus = 1;  // ascending eigenvalues: +1 is the second
    AVec e3 = es2.eigenvectors()(0, plus) * comp[0] + es2.eigenvectors()(1, plus) * comp[1];
    e3 = normalize_sign(e3 / amb.g_norm(s.P, e3));
    const AVec e4 = amb.almost_complex(s.P, e3);
    cf.e = {e1, e2, e3, e4, U_amb};
  } else if (rank == 2) {
    cf.status = CanonicalFrame::Status::Dim2;
    cf.dim = 2;
    cf.c = 0.0;
    // P on the 4-dimensional complement of span{xi, U} has two +1 and two -1
    // directions; e1, e3 are the +1 pair
    const auto comp = complement<4>(amb, s.P, s.hint, {s.xi, U_amb});
    Eigen::Matrix4d pm;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        pm(i, j) = g(amb.product_structure(s.P, comp[j]), comp[i]);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es4(pm);
    auto combine = [&](int col) {
      AVec v = AVec::Zero(s.P.size());
      for (int i = 0; i < 4; ++i) v += es4.eigenvectors()(i, col) * comp[i];
      return normalize_sign(v / amb.g_norm(s.P, v));
    };
    const AVec e1 = combine(3);  // eigenvalues ascending: last two are +1
    const AVec e3 = combine(2);
    cf.e = {e1, amb.almost_complex(s.P, e1), e3, amb.almost_complex(s.P, e3), U_amb};
  } else {
    cf.status = CanonicalFrame::Status::Ambiguous;
    cf.dim = rank;
  }
  return cf;
}

}  // namespace nk::hyp
