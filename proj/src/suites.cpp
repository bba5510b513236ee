#include "nklab/suites.hpp"

#include <cmath>

#include "nklab/hypersurface.hpp"
#include "nklab/rng.hpp"
#include "nklab/s3s3.hpp"
#include "nklab/s6.hpp"

namespace nk::suites {

bool all_pass(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Collector::add(double v) {
  if (n_ == 0) {
    min_ = max_ = v;
  } else {
    min_ = std::min(min_, v);
    max_ = std::max(max_, v);
  }
  sum_ += v;
  ++n_;
}

CheckRecord Collector::max_le(const std::string& name, double threshold) const {
  CheckRecord r{name, min_, n_ ? sum_ / n_ : 0.0, max_, threshold, CheckKind::MaxLe,
                max_ <= threshold};
  return r;
}

CheckRecord Collector::min_ge(const std::string& name, double threshold) const {
  CheckRecord r{name, min_, n_ ? sum_ / n_ : 0.0, max_, threshold, CheckKind::MinGe,
                min_ >= threshold};
  return r;
}

CheckRecord Collector::record(const std::string& name) const {
  CheckRecord r{name, min_, n_ ? sum_ / n_ : 0.0, max_, 0.0, CheckKind::Record, true};
  return r;
}

// ---------------------------------------------------------------------------

namespace {

s3s3::Point random_point_s3s3(SampleRng& rng) {
  return {rng.unit_quat(), rng.unit_quat()};
}

s3s3::Tangent random_unit_tangent(SampleRng& rng, const s3s3::Point& pt) {
  const s3s3::Tangent t{pt, rng.tangent_at(pt.p), rng.tangent_at(pt.q)};
  return s3s3::scale(t, 1.0 / s3s3::g_norm(t));
}

}  // namespace

std::vector<CheckRecord> s3s3_identities(int samples, uint64_t seed,
                                         const FdSteps& steps) {
  using namespace s3s3;
  Collector j_sq, j_iso, p_sq, pj_anti, g_pd;
  Collector g_skew, g_jcomp, g_cyclic, g_four, g_norm_c, nabla_p, curv, bianchi;

  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<uint64_t>(s));
    const Point pt = random_point_s3s3(rng);
    const Tangent x = random_unit_tangent(rng, pt);
    const Tangent y = random_unit_tangent(rng, pt);
    const Tangent z = random_unit_tangent(rng, pt);
    const Tangent w = random_unit_tangent(rng, pt);

    // closed-form structure checks
    const Tangent jx = almost_complex(x), jy = almost_complex(y);
    j_sq.add(g_norm(add(almost_complex(jx), x)));
    j_iso.add(std::abs(metric(jx, jy) - metric(x, y)));
    const Tangent px = product_structure(x);
    p_sq.add(g_norm(add(product_structure(px), scale(x, -1.0))));
    pj_anti.add(g_norm(add(product_structure(jx), almost_complex(px))));
    g_pd.add(metric(x, x));

    // finite-difference G identities
    const Connection conn(pt, steps.h1);
    const Tangent gxy = g_tensor(conn, x, y, steps.h1);
    g_skew.add(g_norm(add(gxy, g_tensor(conn, y, x, steps.h1))));
    g_jcomp.add(g_norm(add(g_tensor(conn, x, jy, steps.h1), almost_complex(gxy))));
    g_cyclic.add(std::abs(metric(gxy, z) + metric(g_tensor(conn, x, z, steps.h1), y)));

    // four-slot identity
    const double lhs = metric(gxy, g_tensor(conn, z, w, steps.h1));
    const Tangent jz = almost_complex(z), jw = almost_complex(w);
    const double rhs = (metric(x, z) * metric(y, w) - metric(x, w) * metric(y, z) +
                        metric(jx, z) * metric(jw, y) - metric(jx, w) * metric(jz, y)) /
                       3.0;
    g_four.add(std::abs(lhs - rhs));
  }

  // the heavier identities run on a reduced deterministic subset
  const int reduced = std::max(1, samples / 5);
  for (int s = 0; s < reduced; ++s) {
    SampleRng rng(seed ^ 0x9E3779B97F4A7C15ULL, static_cast<uint64_t>(s));
    const Point pt = random_point_s3s3(rng);
    const Connection conn(pt, steps.h1);
    const Tangent x = random_unit_tangent(rng, pt);
    Tangent y = random_unit_tangent(rng, pt);
    const Tangent jx = almost_complex(x);

    // norm constant on adapted pairs
    Tangent ya = y;
    ya = add(ya, scale(x, -metric(ya, x)));
    ya = add(ya, scale(jx, -metric(ya, jx)));
    ya = scale(ya, 1.0 / g_norm(ya));
    const Tangent gxa = g_tensor(conn, x, ya, steps.h1);
    g_norm_c.add(std::abs(metric(gxa, gxa) - 1.0 / 3.0));

    // product-structure derivative identity
    nabla_p.add(nabla_p_residual(x, y, steps));
  }

  const int curv_samples = std::max(1, samples / 20);
  for (int s = 0; s < curv_samples; ++s) {
    SampleRng rng(seed ^ 0xD1342543DE82EF95ULL, static_cast<uint64_t>(s));
    const Point pt = random_point_s3s3(rng);
    const Tangent x = random_unit_tangent(rng, pt);
    const Tangent y = random_unit_tangent(rng, pt);
    const Tangent z = random_unit_tangent(rng, pt);
    const Tangent formula = curvature_formula(x, y, z);
    const Tangent numeric = curvature_numeric(x, y, z, steps);
    const double ref = std::max(1.0, g_norm(formula));
    curv.add(g_norm(add(formula, scale(numeric, -1.0))) / ref);

    const Chart chart(pt);
    bianchi.add(fd::bianchi_residual(fd::riemann(chart.metric_fn(), Vec6::Zero(),
                                                 steps.h1, steps.h2)));
  }

  return {
      j_sq.max_le("j_squared_plus_identity", 1e-10),
      j_iso.max_le("j_isometry", 1e-10),
      p_sq.max_le("p_squared_minus_identity", 1e-10),
      pj_anti.max_le("pj_anticommutator", 1e-10),
      g_pd.min_ge("metric_positive_on_unit_vectors", 1e-6),
      g_skew.max_le("g_tensor_skew", 5e-5),
      g_jcomp.max_le("g_tensor_j_compatibility", 5e-5),
      g_cyclic.max_le("g_tensor_cyclic", 5e-5),
      g_four.max_le("g_tensor_four_slot", 1e-3),
      g_norm_c.max_le("g_norm_constant_one_third", 1e-3),
      nabla_p.max_le("product_structure_derivative", 1e-4),
      curv.max_le("curvature_formula_vs_fd", 1e-3),
      bianchi.max_le("first_bianchi_fd", 1e-3),
  };
}

std::vector<CheckRecord> s6_identities(int samples, uint64_t seed,
                                       const FdSteps& steps) {
  using namespace s6;
  Collector j_sq, j_iso, j_skew, g_zero, g_skew, g_orth, g_jcomp, g_const;

  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<uint64_t>(s));
    const Vec7 x = normalize_point(Vec7(rng.normal_vector(7)));
    const Vec7 X = project_tangent(x, Vec7(rng.normal_vector(7))).normalized();
    const Vec7 jx = j6(x, X);
    j_sq.add((j6(x, jx) + X).norm());
    j_iso.add(std::abs(jx.norm() - X.norm()));
    j_skew.add(std::abs(jx.dot(X)));
  }

  const int reduced = std::max(1, samples / 5);
  for (int s = 0; s < reduced; ++s) {
    SampleRng rng(seed ^ 0x9E3779B97F4A7C15ULL, static_cast<uint64_t>(s));
    const Vec7 x = normalize_point(Vec7(rng.normal_vector(7)));
    const Vec7 X = project_tangent(x, Vec7(rng.normal_vector(7))).normalized();
    Vec7 Y = project_tangent(x, Vec7(rng.normal_vector(7))).normalized();
    const Vec7 gxy = g6(x, X, Y, steps.h1);
    g_zero.add(g6(x, X, X, steps.h1).norm());
    g_skew.add((gxy + g6(x, Y, X, steps.h1)).norm());
    g_orth.add(std::abs(gxy.dot(X)));
    g_jcomp.add((g6(x, X, j6(x, Y), steps.h1) + j6(x, gxy)).norm());

    // adapted pair: record the measured norm constant without asserting it
    const Vec7 jx = j6(x, X);
    Y -= X * X.dot(Y);
    Y -= jx * jx.dot(Y);
    Y.normalize();
    g_const.add(g6(x, X, Y, steps.h1).squaredNorm());
  }

  return {
      j_sq.max_le("j_squared_plus_identity", 1e-12),
      j_iso.max_le("j_isometry", 1e-12),
      j_skew.max_le("j_skew", 1e-12),
      g_zero.max_le("g_tensor_vanishes_on_diagonal", 1e-5),
      g_skew.max_le("g_tensor_skew", 1e-5),
      g_orth.max_le("g_tensor_orthogonal_first_slot", 1e-5),
      g_jcomp.max_le("g_tensor_j_compatibility", 1e-5),
      g_const.record("g_norm_constant_measured"),
  };
}

SurfaceSuite surface_suite(const cat::Entry& entry, int samples, uint64_t seed,
                           const FdSteps& steps) {
  using namespace hyp;
  SurfaceSuite out;
  const Immersion& imm = entry.immersion;
  const bool s3s3_amb = imm.ambient->has_product_structure();

  Collector rank, contact, asym, comm, anti, shape, spread, hopf, codazzi, hopf_id,
      flip_inv;
  SampleOptions opts;
  opts.steps = steps;

  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<uint64_t>(s));
    const Params u = imm.random_interior(seed, static_cast<uint64_t>(s), 0.02);
    const Sample smp = sample(imm, u, opts);

    SurfaceSample rec;
    rec.params = u;
    rank.add(smp.frame_gram_det);
    contact.add(contact_structure_residual(smp));
    asym.add((smp.A - smp.A.transpose()).norm());
    const auto [c, a] = commutator_norms(smp);
    rec.commutator = c;
    rec.anticommutator = a;
    comm.add(c);
    anti.add(a);
    rec.shape_norm = smp.A.norm();
    shape.add(rec.shape_norm);
    const PrincipalProfile prof = principal_profile(smp);
    rec.eig_spread = prof.eigenvalues[0] - prof.eigenvalues[4];
    spread.add(rec.eig_spread);
    rec.hopf_defect = hopf_defect(smp);
    hopf.add(rec.hopf_defect);

    Vec5 x, y;
    for (int i = 0; i < 5; ++i) {
      x[i] = rng.normal();
      y[i] = rng.normal();
    }
    x.normalize();
    y.normalize();
    rec.codazzi = codazzi_residual(imm, u, x, y, opts);
    codazzi.add(rec.codazzi);

    if (rec.hopf_defect <= 1e-4) {
      Vec5 xv = x, yv = y;
      if (s3s3_amb) {
        const Vec5 un = smp.U.normalized();
        xv -= un * un.dot(xv);
        yv -= un * un.dot(yv);
        xv.normalize();
        yv.normalize();
      }
      rec.hopf_identity = hopf_identity_residual(smp, xv, yv, steps.h1);
      hopf_id.add(rec.hopf_identity);
    }

    if (s3s3_amb) {
      const CanonicalFrame cf = distribution_d(smp);
      rec.dim_d = cf.dim;
      rec.a = cf.a;
      rec.b = cf.b;
      rec.c = cf.c;
    }

    if (s == 0) {
      // normal-sign invariance, recomputed directly
      SampleOptions flip = opts;
      flip.flip_normal = true;
      const Sample smp2 = sample(imm, u, flip);
      const auto [c2, a2] = commutator_norms(smp2);
      flip_inv.add(std::abs(c2 - c));
      flip_inv.add(std::abs(a2 - a));
      flip_inv.add(std::abs(hopf_defect(smp2) - rec.hopf_defect));
      flip_inv.add((smp.A + smp2.A).norm());
    }

    out.samples.push_back(rec);
  }

  out.checks.push_back(rank.min_ge("frame_gram_determinant", 1e-8));
  out.checks.push_back(contact.max_le("contact_structure_identities", 1e-6));
  out.checks.push_back(asym.max_le("shape_operator_symmetry", 1e-6));
  out.checks.push_back(codazzi.max_le("codazzi_residual", entry.expected.codazzi_tol));
  out.checks.push_back(flip_inv.max_le("normal_flip_invariance", 1e-10));
  if (entry.expected.commutator_tol)
    out.checks.push_back(comm.max_le("commutator_norm", *entry.expected.commutator_tol));
  else
    out.checks.push_back(comm.record("commutator_norm"));
  if (entry.expected.anticommutator_tol)
    out.checks.push_back(
        anti.max_le("anticommutator_norm", *entry.expected.anticommutator_tol));
  else
    out.checks.push_back(anti.record("anticommutator_norm"));
  if (entry.expected.shape_norm_tol)
    out.checks.push_back(shape.max_le("shape_norm", *entry.expected.shape_norm_tol));
  if (entry.expected.umbilic_tol)
    out.checks.push_back(spread.max_le("eigenvalue_spread", *entry.expected.umbilic_tol));
  out.checks.push_back(hopf.record("hopf_defect"));
  out.checks.push_back(hopf_id.max_le("hopf_identity_residual", 1e-3));
  return out;
}

ObstructionSuite obstruction_suite(const std::string& case_id, int grid, int refine) {
  ObstructionSuite out;
  out.report = obs::feasibility_scan(case_id, grid, refine);

  Collector margin, scan_ratio;
  for (const double m : out.report.margins) margin.add(m);
  out.checks.push_back(margin.min_ge("analytic_margin_positive", 1e-12));
  if (out.report.scan) {
    Collector smin;
    smin.add(out.report.scan->min);
    out.checks.push_back(smin.min_ge("scan_minimum_positive", 1e-12));
    scan_ratio.add(out.report.scan->analytic_at_argmin <= 0.0
                       ? 1.0
                       : out.report.scan->min / out.report.scan->analytic_at_argmin);
    out.checks.push_back(scan_ratio.min_ge("scan_vs_analytic_ratio", 0.99));
  }
  return out;
}

}  // namespace nk::suites
