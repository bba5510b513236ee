#pragma once

#include <array>
#include <functional>
#include <memory>

#include <Eigen/Dense>

#include "nklab/linalg.hpp"

namespace nk {

// Type-erased ambient point / tangent vector: 8 reals (p, q stacked) on
// S^3 x S^3, 7 reals on S^6.
using AVec = Eigen::VectorXd;

// Deterministic choice stabilizing the ambient tangent basis across a
// finite-difference stencil (S^6 drops one coordinate axis; the axis must not
// jump between stencil points).
struct BasisHint {
  int excluded_axis = -1;
};

class AmbientConnection {
 public:
  virtual ~AmbientConnection() = default;
  // Covariant derivative at t = 0 of `field` along `curve`; curve(0) must be
  // the base point the connection was built at.
  virtual AVec derivative(const std::function<AVec(double)>& curve,
                          const std::function<AVec(double)>& field,
                          double h) const = 0;
};

class Ambient {
 public:
  enum class Kind { S3xS3, S6 };

  virtual ~Ambient() = default;

  virtual Kind kind() const = 0;
  virtual int embed_dim() const = 0;

  virtual AVec normalize_point(const AVec& raw) const = 0;
  virtual AVec project_tangent(const AVec& P, const AVec& v) const = 0;
  virtual double metric(const AVec& P, const AVec& a, const AVec& b) const = 0;
  virtual AVec almost_complex(const AVec& P, const AVec& v) const = 0;

  virtual bool has_product_structure() const = 0;
  virtual AVec product_structure(const AVec& P, const AVec& v) const;

  virtual BasisHint basis_hint(const AVec& P) const { (void)P; return {}; }
  virtual std::array<AVec, 6> tangent_basis(const AVec& P, const BasisHint& hint) const = 0;

  virtual std::unique_ptr<AmbientConnection> connection(const AVec& P) const = 0;

  virtual AVec g_tensor(const AVec& P, const AVec& X, const AVec& Y, double h) const = 0;
  virtual AVec curvature(const AVec& P, const AVec& X, const AVec& Y,
                         const AVec& Z) const = 0;

  double g_norm(const AVec& P, const AVec& v) const;
};

const Ambient& ambient_s3s3();
const Ambient& ambient_s6();

}  // namespace nk
