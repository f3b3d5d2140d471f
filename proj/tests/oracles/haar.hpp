#pragma once

// Quadrature over the group that integrates products of matrix entries
// exactly for the spins exercised here: both phase angles get 40 uniform
// points over one full 4*pi period (exact through frequency 2m = 39), the
// middle angle a 100-node Gauss-Legendre rule in its cosine (exact through
// polynomial degree 199).  160000 nodes total.

#include <cmath>
#include <functional>
#include <vector>

#include "holotriple/su2.hpp"
#include "holotriple/types.hpp"

namespace holo::oracle {

struct HaarRule {
  std::vector<Mat2> points;
  std::vector<double> weights;  // sums to 1
};

inline void gauss_legendre(int n, std::vector<double>& x,
                           std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double step = p0 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

inline const HaarRule& haar_rule() {
  static HaarRule rule = [] {
    HaarRule r;
    const int na = 40, ng = 40, nb = 100;
    std::vector<double> xb, wb;
    gauss_legendre(nb, xb, wb);
    for (int i = 0; i < na; ++i) {
      double alpha = 4.0 * M_PI * i / na;
      Mat2 ga = exp_su2(alpha * Vec3::UnitZ());
      for (int k = 0; k < nb; ++k) {
        double beta = std::acos(xb[k]);
        Mat2 gb = exp_su2(beta * Vec3::UnitY());
        Mat2 gab = ga * gb;
        for (int l = 0; l < ng; ++l) {
          double gamma = 4.0 * M_PI * l / ng;
          r.points.push_back(gab * exp_su2(gamma * Vec3::UnitZ()));
          r.weights.push_back(wb[k] / (2.0 * na * ng));
        }
      }
    }
    return r;
  }();
  return rule;
}

inline cd haar_integral(const std::function<cd(const Mat2&)>& f) {
  const HaarRule& r = haar_rule();
  cd s = 0.0;
  for (size_t i = 0; i < r.points.size(); ++i) s += r.weights[i] * f(r.points[i]);
  return s;
}

// Normalized basis entry sqrt(2j+1) D^j_{mn}(g).
inline cd basis_entry(int two_j, int two_m, int two_n, const Mat2& g) {
  Mat d = wigner_d(two_j, g);
  return std::sqrt(two_j + 1.0) *
         d((two_j - two_m) / 2, (two_j - two_n) / 2);
}

}  // namespace holo::oracle
