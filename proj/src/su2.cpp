#include "holotriple/su2.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace holo {

Mat2 sigma(int a) {
  Mat2 s = Mat2::Zero();
  switch (a) {
    case 0:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 1:
      s(0, 1) = -im;
      s(1, 0) = im;
      break;
    case 2:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("sigma: index out of range");
  }
  return s;
}

Mat2 exp_mat2(const Mat2& m) {
  cd lam = 0.5 * m.trace();
  Mat2 b = m - lam * Mat2::Identity();
  cd mu2 = -b.determinant();  // b traceless => b^2 = mu2 * I
  cd mu = std::sqrt(mu2);
  cd ch, shc;
  if (std::abs(mu) < 1e-6) {
    ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0;
    shc = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
  } else {
    ch = std::cosh(mu);
    shc = std::sinh(mu) / mu;
  }
  return std::exp(lam) * (ch * Mat2::Identity() + shc * b);
}

Mat2 exp_su2(const Vec3& w) {
  Mat2 a = Mat2::Zero();
  for (int k = 0; k < 3; ++k) a += 0.5 * im * w[k] * sigma(k);
  return exp_mat2(a);
}

Mat2 boost_su2(const Vec3& b) {
  Mat2 a = Mat2::Zero();
  for (int k = 0; k < 3; ++k) a += 0.5 * b[k] * sigma(k);
  return exp_mat2(a);
}

Mat jz(int two_j) {
  int d = dim_j(two_j);
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 0.5 * (two_j - 2 * i);
  return m;
}

Mat jplus(int two_j) {
  int d = dim_j(two_j);
  double jj = jj1(two_j);
  Mat m = Mat::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    double mj = 0.5 * (two_j - 2 * i);
    m(i - 1, i) = std::sqrt(jj - mj * (mj + 1.0));
  }
  return m;
}

Mat jminus(int two_j) { return jplus(two_j).adjoint(); }

Mat jmat(int two_j, int a) {
  switch (a) {
    case 0:
      return 0.5 * (jplus(two_j) + jminus(two_j));
    case 1:
      return -0.5 * im * (jplus(two_j) - jminus(two_j));
    case 2:
      return jz(two_j);
    default:
      throw std::invalid_argument("jmat: index out of range");
  }
}

Mat tau(int two_j, int a) { return im * jmat(two_j, a); }

namespace {

double fact(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(64);
    t[0] = 1.0;
    for (int k = 1; k < 64; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table.at(n);
}

std::vector<cd> powers(cd x, int n) {
  std::vector<cd> p(n + 1);
  p[0] = 1.0;
  for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * x;
  return p;
}

}  // namespace

Mat wigner_d(int two_j, const Mat2& g) {
  int d = dim_j(two_j);
  auto pa = powers(g(0, 0), two_j);
  auto pc = powers(g(1, 0), two_j);
  auto pb = powers(g(0, 1), two_j);
  auto pe = powers(g(1, 1), two_j);
  Mat D(d, d);
  // Row index r: m' = j - r.  Column index c: m = j - c.
  // Coefficient of e_{m'} in e_m(z g), expanded binomially.
  for (int c = 0; c < d; ++c) {
    int jpm = two_j - c;  // j + m
    int jmm = c;          // j - m
    for (int r = 0; r < d; ++r) {
      int jpmp = two_j - r;  // j + m'
      int jmmp = r;          // j - m'
      double pref = std::sqrt(fact(jpmp) * fact(jmmp) / (fact(jpm) * fact(jmm)));
      int klo = std::max(0, two_j - r - c);
      int khi = std::min(jpm, jpmp);
      cd sum = 0.0;
      for (int k = klo; k <= khi; ++k) {
        double comb = fact(jpm) / (fact(k) * fact(jpm - k)) * fact(jmm) /
                      (fact(jpmp - k) * fact(jmm - jpmp + k));
        sum += comb * pa[k] * pc[jpm - k] * pb[jpmp - k] * pe[k - (two_j - r - c)];
      }
      D(r, c) = pref * sum;
    }
  }
  return D;
}

cd character(int two_j, const Mat2& g) { return wigner_d(two_j, g).trace(); }

}  // namespace holo
