#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

// Closed-form coupling coefficient as an alternating factorial sum.
// Independent of the production construction; long double throughout.
namespace oracle {

inline long double lfact(int n) {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(80);
    t[0] = 1.0L;
    for (int k = 1; k < 80; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table.at(n);
}

inline long double racah_cg(int two_j1, int two_m1, int two_j2, int two_m2,
                            int two_j, int two_m) {
  if (two_m1 + two_m2 != two_m) return 0.0L;
  if (two_j < std::abs(two_j1 - two_j2) || two_j > two_j1 + two_j2) return 0.0L;
  if ((two_j1 + two_j2 + two_j) % 2 != 0) return 0.0L;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
      std::abs(two_m) > two_j)
    return 0.0L;

  auto h = [](int twice) { return twice / 2; };
  int j1pm1 = h(two_j1 + two_m1), j1mm1 = h(two_j1 - two_m1);
  int j2pm2 = h(two_j2 + two_m2), j2mm2 = h(two_j2 - two_m2);
  int jpm = h(two_j + two_m), jmm = h(two_j - two_m);
  int a = h(two_j1 + two_j2 - two_j);
  int b = h(two_j1 - two_j2 + two_j);
  int c = h(-two_j1 + two_j2 + two_j);
  int s = h(two_j1 + two_j2 + two_j);

  long double delta =
      std::sqrt(lfact(a) * lfact(b) * lfact(c) / lfact(s + 1));
  long double pref =
      std::sqrt(static_cast<long double>(two_j + 1)) * delta *
      std::sqrt(lfact(j1pm1) * lfact(j1mm1) * lfact(j2pm2) * lfact(j2mm2) *
                lfact(jpm) * lfact(jmm));

  int t3 = h(two_j - two_j2 + two_m1);  // j - j2 + m1
  int t4 = h(two_j - two_j1 - two_m2);  // j - j1 - m2
  int klo = std::max({0, -t3, -t4});
  int khi = std::min({a, j1mm1, j2pm2});
  long double sum = 0.0L;
  for (int k = klo; k <= khi; ++k) {
    long double den = lfact(k) * lfact(a - k) * lfact(j1mm1 - k) *
                      lfact(j2pm2 - k) * lfact(t3 + k) * lfact(t4 + k);
    sum += ((k % 2 == 0) ? 1.0L : -1.0L) / den;
  }
  return pref * sum;
}

}  // namespace oracle
