#include "nklab/rng.hpp"

#include <cmath>

namespace nk {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t substream_seed(uint64_t master, uint64_t index) {
  uint64_t state = master;
  uint64_t h = splitmix64(state);
  state = h ^ (index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL);
  return splitmix64(state);
}

double SampleRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0,1] x [0,1) uniforms
  const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Eigen::VectorXd SampleRng::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Quat SampleRng::unit_quat() {
  while (true) {
    Quat q{normal(), normal(), normal(), normal()};
    const double n = norm(q);
    if (n > 1e-6) return q / n;
  }
}

Quat SampleRng::tangent_at(const Quat& p) {
  Quat v{normal(), normal(), normal(), normal()};
  const double c = dot(v, p) / norm2(p);
  return v - p * c;
}

}  // namespace nk
