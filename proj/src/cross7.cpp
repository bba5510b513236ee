#include "nklab/cross7.hpp"

#include <array>

namespace nk {

namespace {

struct Cross7Table {
  // product[i][j] = index of e_i x e_j, -1 if zero; sign[i][j] in {-1,0,+1}
  std::array<std::array<int, 7>, 7> product{};
  std::array<std::array<int, 7>, 7> sign{};

  Cross7Table() {
    for (auto& row : product) row.fill(-1);
    for (auto& row : sign) row.fill(0);
    for (int i = 0; i < 7; ++i) {
      const int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
      set(a, b, c);
      set(b, c, a);
      set(c, a, b);
    }
  }

  void set(int i, int j, int k) {
    product[i][j] = k;
    sign[i][j] = 1;
    product[j][i] = k;
    sign[j][i] = -1;
  }
};

const Cross7Table& table() {
  static const Cross7Table t;
  return t;
}

}  // namespace

Vec7 cross7(const Vec7& a, const Vec7& b) {
  const Cross7Table& t = table();
  Vec7 out = Vec7::Zero();
  for (int i = 0; i < 7; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < 7; ++j) {
      const int k = t.product[i][j];
      if (k >= 0) out[k] += t.sign[i][j] * a[i] * b[j];
    }
  }
  return out;
}

int cross7_sign(int i, int j, int k) {
  const Cross7Table& t = table();
  return (t.product[i][j] == k) ? t.sign[i][j] : 0;
}

}  // namespace nk
