#pragma once

#include <Eigen/Dense>

namespace nk {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Finite-difference step sizes: h1 for first derivatives, h2 for nested /
// second derivatives.
struct FdSteps {
  double h1 = 1e-4;
  double h2 = 1e-3;
};

}  // namespace nk
