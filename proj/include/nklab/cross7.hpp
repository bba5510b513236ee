#pragma once

#include <Eigen/Core>

namespace nk {

using Vec7 = Eigen::Matrix<double, 7, 1>;

// Vector cross product of imaginary octonions, R^7.
// Multiplication table: oriented Fano lines {i, i+1, i+3} (indices mod 7),
// i.e. e_i x e_{i+1} = e_{i+3} for the standard basis.
Vec7 cross7(const Vec7& a, const Vec7& b);

// Signed structure constant c with e_i x e_j = c * e_k (0 if k not on the
// line through i, j).
int cross7_sign(int i, int j, int k);

}  // namespace nk
