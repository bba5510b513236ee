#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nklab/catalog.hpp"
#include "nklab/linalg.hpp"
#include "nklab/obstructions.hpp"

namespace nk::suites {

enum class CheckKind { MaxLe, MinGe, Record };

struct CheckRecord {
  std::string name;
  double min = 0.0, mean = 0.0, max = 0.0;
  double threshold = 0.0;
  CheckKind kind = CheckKind::MaxLe;
  bool pass = true;
};

bool all_pass(const std::vector<CheckRecord>& checks);

// Accumulates residuals and turns them into a CheckRecord.
class Collector {
 public:
  void add(double v);
  CheckRecord max_le(const std::string& name, double threshold) const;
  CheckRecord min_ge(const std::string& name, double threshold) const;
  CheckRecord record(const std::string& name) const;

 private:
  double min_ = 0.0, max_ = 0.0, sum_ = 0.0;
  long n_ = 0;
};

// Ambient identity suites: closed-form structure checks plus the
// finite-difference G / curvature / product-structure identities.
std::vector<CheckRecord> s3s3_identities(int samples, uint64_t seed,
                                         const FdSteps& steps = {});
std::vector<CheckRecord> s6_identities(int samples, uint64_t seed,
                                       const FdSteps& steps = {});

struct SurfaceSample {
  Vec5 params;
  double commutator = 0.0, anticommutator = 0.0;
  double shape_norm = 0.0, eig_spread = 0.0;
  double hopf_defect = 0.0, codazzi = 0.0;
  double hopf_identity = -1.0;  // -1 when not Hopf at tolerance
  int dim_d = 0;                // 0 on S^6
  double a = 0.0, b = 0.0, c = 0.0;
};

struct SurfaceSuite {
  std::vector<CheckRecord> checks;
  std::vector<SurfaceSample> samples;
};

SurfaceSuite surface_suite(const cat::Entry& entry, int samples, uint64_t seed,
                           const FdSteps& steps = {});

struct ObstructionSuite {
  std::vector<CheckRecord> checks;
  obs::Report report;
};

ObstructionSuite obstruction_suite(const std::string& case_id, int grid, int refine);

}  // namespace nk::suites
