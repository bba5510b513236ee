#include "nklab/ambient.hpp"

#include <cmath>
#include <stdexcept>

#include "nklab/s3s3.hpp"
#include "nklab/s6.hpp"

namespace nk {

AVec Ambient::product_structure(const AVec&, const AVec&) const {
  throw std::logic_error("ambient has no product structure");
}

double Ambient::g_norm(const AVec& P, const AVec& v) const {
  return std::sqrt(std::max(0.0, metric(P, v, v)));
}

namespace {

// ---------------------------------------------------------------------------
// S^3 x S^3 adapter: points/vectors packed as (p.w p.x p.y p.z q.w q.x q.y q.z)

Quat quat_of(const AVec& v, int off) { return {v[off], v[off + 1], v[off + 2], v[off + 3]}; }

void put_quat(AVec& v, int off, const Quat& q) {
  v[off] = q.w;
  v[off + 1] = q.x;
  v[off + 2] = q.y;
  v[off + 3] = q.z;
}

s3s3::Point point_of(const AVec& P) { return {quat_of(P, 0), quat_of(P, 4)}; }

s3s3::Tangent tangent_of(const AVec& P, const AVec& v) {
  return {point_of(P), quat_of(v, 0), quat_of(v, 4)};
}

AVec pack(const Quat& a, const Quat& b) {
  AVec v(8);
  put_quat(v, 0, a);
  put_quat(v, 4, b);
  return v;
}

AVec pack_tangent(const s3s3::Tangent& t) { return pack(t.u, t.v); }

class S3S3Connection final : public AmbientConnection {
 public:
  explicit S3S3Connection(const s3s3::Point& base) : conn_(base) {}

  AVec derivative(const std::function<AVec(double)>& curve,
                  const std::function<AVec(double)>& field, double h) const override {
    auto curve_q = [&](double t) { return point_of(curve(t)); };
    auto field_q = [&](double t) {
      const AVec P = curve(t);
      return tangent_of(P, field(t));
    };
    return pack_tangent(conn_.derivative(curve_q, field_q, h));
  }

 private:
  s3s3::Connection conn_;
};

class S3S3Ambient final : public Ambient {
 public:
  Kind kind() const override { return Kind::S3xS3; }
  int embed_dim() const override { return 8; }

  AVec normalize_point(const AVec& raw) const override {
    const s3s3::Point pt = s3s3::make_point(quat_of(raw, 0), quat_of(raw, 4));
    return pack(pt.p, pt.q);
  }

  AVec project_tangent(const AVec& P, const AVec& v) const override {
    return pack_tangent(s3s3::project_tangent(point_of(P), quat_of(v, 0), quat_of(v, 4)));
  }

  double metric(const AVec& P, const AVec& a, const AVec& b) const override {
    return s3s3::metric(tangent_of(P, a), tangent_of(P, b));
  }

  AVec almost_complex(const AVec& P, const AVec& v) const override {
    return pack_tangent(s3s3::almost_complex(tangent_of(P, v)));
  }

  bool has_product_structure() const override { return true; }

  AVec product_structure(const AVec& P, const AVec& v) const override {
    return pack_tangent(s3s3::product_structure(tangent_of(P, v)));
  }

  std::array<AVec, 6> tangent_basis(const AVec& P, const BasisHint&) const override {
    const s3s3::Chart chart(point_of(P));
    std::array<AVec, 6> out;
    const auto f = chart.frame(Vec6::Zero());
    for (int i = 0; i < 6; ++i) out[i] = pack_tangent(f[i]);
    return out;
  }

  std::unique_ptr<AmbientConnection> connection(const AVec& P) const override {
    return std::make_unique<S3S3Connection>(point_of(P));
  }

  AVec g_tensor(const AVec& P, const AVec& X, const AVec& Y, double h) const override {
    return pack_tangent(
        s3s3::g_tensor(tangent_of(P, X), tangent_of(P, Y), FdSteps{h, 10.0 * h}));
  }

  AVec curvature(const AVec& P, const AVec& X, const AVec& Y, const AVec& Z) const override {
    return pack_tangent(
        s3s3::curvature_formula(tangent_of(P, X), tangent_of(P, Y), tangent_of(P, Z)));
  }
};

// ---------------------------------------------------------------------------
// S^6 adapter

Vec7 v7(const AVec& v) { return Vec7(v); }

class S6Connection final : public AmbientConnection {
 public:
  explicit S6Connection(Vec7 base) : base_(std::move(base)) {}

  AVec derivative(const std::function<AVec(double)>& /*curve*/,
                  const std::function<AVec(double)>& field, double h) const override {
    const Vec7 d = (v7(field(h)) - v7(field(-h))) / (2.0 * h);
    return s6::project_tangent(base_, d);
  }

 private:
  Vec7 base_;
};

class S6Ambient final : public Ambient {
 public:
  Kind kind() const override { return Kind::S6; }
  int embed_dim() const override { return 7; }

  AVec normalize_point(const AVec& raw) const override { return s6::normalize_point(v7(raw)); }

  AVec project_tangent(const AVec& P, const AVec& v) const override {
    return s6::project_tangent(v7(P), v7(v));
  }

  double metric(const AVec&, const AVec& a, const AVec& b) const override { return a.dot(b); }

  AVec almost_complex(const AVec& P, const AVec& v) const override {
    return s6::j6(v7(P), v7(v));
  }

  bool has_product_structure() const override { return false; }

  BasisHint basis_hint(const AVec& P) const override {
    int axis = 0;
    for (int i = 1; i < 7; ++i)
      if (std::abs(P[i]) > std::abs(P[axis])) axis = i;
    return {axis};
  }

  std::array<AVec, 6> tangent_basis(const AVec& P, const BasisHint& hint) const override {
    const int excluded = hint.excluded_axis >= 0 ? hint.excluded_axis : basis_hint(P).excluded_axis;
    const Vec7 x = v7(P);
    std::array<AVec, 6> out;
    int n = 0;
    for (int i = 0; i < 7; ++i) {
      if (i == excluded) continue;
      Vec7 e = Vec7::Zero();
      e[i] = 1.0;
      Vec7 w = s6::project_tangent(x, e);
      for (int j = 0; j < n; ++j) {
        const Vec7 prev = v7(out[j]);
        w -= prev * prev.dot(w);
      }
      const double nn = w.norm();
      if (nn < 1e-6) throw std::domain_error("s6 tangent basis degenerate");
      out[n++] = w / nn;
    }
    return out;
  }

  std::unique_ptr<AmbientConnection> connection(const AVec& P) const override {
    return std::make_unique<S6Connection>(v7(P));
  }

  AVec g_tensor(const AVec& P, const AVec& X, const AVec& Y, double h) const override {
    return s6::g6(v7(P), v7(X), v7(Y), h);
  }

  AVec curvature(const AVec&, const AVec& X, const AVec& Y, const AVec& Z) const override {
    return s6::curvature(v7(X), v7(Y), v7(Z));
  }
};

}  // namespace

const Ambient& ambient_s3s3() {
  static const S3S3Ambient a;
  return a;
}

const Ambient& ambient_s6() {
  static const S6Ambient a;
  return a;
}

}  // namespace nk
