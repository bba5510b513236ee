#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "nklab/quat.hpp"

namespace nk {

// splitmix64 step; used to derive per-sample sub-seeds from a master seed so
// the draws for sample k never depend on iteration order.
uint64_t splitmix64(uint64_t& state);
uint64_t substream_seed(uint64_t master, uint64_t index);

// Deterministic sample stream: mt19937_64 bit output (standardized) plus
// hand-rolled uniform/Box-Muller transforms, so draws are identical across
// standard libraries and platforms.
class SampleRng {
 public:
  explicit SampleRng(uint64_t seed) : gen_(seed) {}
  SampleRng(uint64_t master, uint64_t index) : gen_(substream_seed(master, index)) {}

  uint64_t bits() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal();
  Eigen::VectorXd normal_vector(int n);

  // uniform on S^3 (four normal deviates, normalized)
  Quat unit_quat();
  // tangent draw at unit quaternion p: <p, out> = 0
  Quat tangent_at(const Quat& p);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nk
