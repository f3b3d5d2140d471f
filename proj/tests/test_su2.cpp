#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "holotriple/su2.hpp"
#include "oracles/series_exp.hpp"
#include "oracles/tensor_power.hpp"

using namespace holo;

namespace {

std::mt19937 rng(12345);

double uni(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

// Unit quaternion -> SU(2), built without exp_su2.
Mat2 random_su2() {
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = uni(-1.0, 1.0);
  q.normalize();
  Mat2 g = q[0] * Mat2::Identity();
  for (int a = 0; a < 3; ++a) g += im * q[a + 1] * sigma(a);
  return g;
}

Mat2 random_sl2() {
  Mat2 g;
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = cd(uni(-1, 1), uni(-1, 1));
  } while (std::abs(g.determinant()) < 0.2);
  return g / std::sqrt(g.determinant());
}

Vec3 random_vec3(double scale) {
  return Vec3(uni(-scale, scale), uni(-scale, scale), uni(-scale, scale));
}

}  // namespace

TEST_CASE("pauli matrix algebra") {
  for (int a = 0; a < 3; ++a) {
    CHECK((sigma(a) * sigma(a) - Mat2::Identity()).norm() == doctest::Approx(0.0));
    CHECK((sigma(a) - sigma(a).adjoint()).norm() == doctest::Approx(0.0));
  }
  Mat2 comm = sigma(0) * sigma(1) - sigma(1) * sigma(0);
  CHECK((comm - 2.0 * im * sigma(2)).norm() == doctest::Approx(0.0));
  comm = sigma(1) * sigma(2) - sigma(2) * sigma(1);
  CHECK((comm - 2.0 * im * sigma(0)).norm() == doctest::Approx(0.0));
  comm = sigma(2) * sigma(0) - sigma(0) * sigma(2);
  CHECK((comm - 2.0 * im * sigma(1)).norm() == doctest::Approx(0.0));
}

TEST_CASE("closed-form 2x2 exponential matches series") {
  for (int trial = 0; trial < 50; ++trial) {
    Mat2 a;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) = cd(uni(-2, 2), uni(-2, 2));
    Mat e = oracle::series_exp(a);
    CHECK((exp_mat2(a) - e).norm() < 1e-11 * std::max(1.0, e.norm()));
  }
}

TEST_CASE("group-valued exponentials") {
  for (int trial = 0; trial < 20; ++trial) {
    Vec3 w = random_vec3(3.0);
    Mat2 g = exp_su2(w);
    CHECK((g * g.adjoint() - Mat2::Identity()).norm() < 1e-12);
    CHECK(std::abs(g.determinant() - 1.0) < 1e-12);

    Mat2 p = boost_su2(w);
    CHECK((p - p.adjoint()).norm() < 1e-12);
    CHECK(std::abs(p.determinant() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat2> es(p);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("defining representation is the matrix itself") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat2 g = random_sl2();
    CHECK((wigner_d(1, g) - g).norm() < 1e-13);
  }
}

TEST_CASE("representation matrices are multiplicative") {
  for (int two_j = 1; two_j <= 6; ++two_j) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat2 g = random_sl2();
      Mat2 h = random_sl2();
      Mat lhs = wigner_d(two_j, g * h);
      Mat rhs = wigner_d(two_j, g) * wigner_d(two_j, h);
      CHECK((lhs - rhs).norm() < 1e-10 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("unitary on unitary input") {
  for (int two_j = 1; two_j <= 8; ++two_j) {
    Mat2 g = random_su2();
    Mat d = wigner_d(two_j, g);
    CHECK((d * d.adjoint() - Mat::Identity(two_j + 1, two_j + 1)).norm() < 1e-12);
  }
}

TEST_CASE("character depends only on the rotation angle") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat2 g = random_su2();
    double half_tr = 0.5 * g.trace().real();
    double theta = 2.0 * std::acos(std::clamp(half_tr, -1.0, 1.0));
    if (std::abs(std::sin(0.5 * theta)) < 1e-3) continue;
    for (int two_j = 0; two_j <= 8; ++two_j) {
      cd chi = wigner_d(two_j, g).trace();
      double expect =
          std::sin(0.5 * (two_j + 1) * theta) / std::sin(0.5 * theta);
      CHECK(std::abs(chi - expect) < 1e-10);
    }
    Mat2 h = random_su2();
    Mat conj = wigner_d(6, h * g * h.adjoint());
    CHECK(std::abs(conj.trace() - wigner_d(6, g).trace()) < 1e-11);
  }
}

TEST_CASE("spin-1 rotation about the third axis is diagonal") {
  double t = 0.7318;
  Mat d = wigner_d(2, exp_su2(t * Vec3::UnitZ()));
  Mat want = Mat::Zero(3, 3);
  want(0, 0) = std::exp(im * t);
  want(1, 1) = 1.0;
  want(2, 2) = std::exp(-im * t);
  CHECK((d - want).norm() < 1e-13);
}

TEST_CASE("angular momentum matrices") {
  for (int two_j = 1; two_j <= 8; ++two_j) {
    int d = dim_j(two_j);
    Mat casimir = Mat::Zero(d, d);
    for (int a = 0; a < 3; ++a) {
      Mat ja = jmat(two_j, a);
      CHECK((ja - ja.adjoint()).norm() < 1e-13);
      casimir += ja * ja;
    }
    CHECK((casimir - jj1(two_j) * Mat::Identity(d, d)).norm() < 1e-11);

    // [J_a, J_b] = i eps_abc J_c, hence [tau_a, tau_b] = -eps_abc tau_c.
    for (int a = 0; a < 3; ++a) {
      int b = (a + 1) % 3, c = (a + 2) % 3;
      Mat comm = tau(two_j, a) * tau(two_j, b) - tau(two_j, b) * tau(two_j, a);
      CHECK((comm + tau(two_j, c)).norm() < 1e-11);
      CHECK((tau(two_j, a) + tau(two_j, a).adjoint()).norm() < 1e-13);
    }
  }
  for (int a = 0; a < 3; ++a)
    CHECK((tau(1, a) - 0.5 * im * sigma(a)).norm() < 1e-14);
}

TEST_CASE("matches symmetrized tensor powers") {
  for (int two_j = 0; two_j <= 4; ++two_j) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat2 g = random_sl2();
      Mat ref = oracle::sym_tensor_power(g, two_j);
      CHECK((wigner_d(two_j, g) - ref).norm() < 1e-11 * std::max(1.0, ref.norm()));
    }
  }
}

TEST_CASE("character closed form on eigenvalues") {
  CHECK(std::abs(character(5, Mat2::Identity()) - cd(6.0)) < 1e-14);
  for (int trial = 0; trial < 10; ++trial) {
    Mat2 g = random_sl2();
    Eigen::ComplexEigenSolver<Mat2> es(g);
    cd lam = es.eigenvalues()[0];
    if (std::abs(lam - 1.0 / lam) < 1e-2) continue;
    for (int two_j = 0; two_j <= 6; ++two_j) {
      cd want = (std::pow(lam, two_j + 1) - std::pow(lam, -(two_j + 1))) /
                (lam - 1.0 / lam);
      CHECK(std::abs(character(two_j, g) - want) <
            1e-9 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("one-parameter subgroups agree with generator exponentials") {
  for (int two_j = 1; two_j <= 6; ++two_j) {
    for (int a = 0; a < 3; ++a) {
      double t = 0.3 + 0.2 * a + 0.05 * two_j;
      Mat direct = oracle::series_exp(t * tau(two_j, a));
      Mat viagrp = wigner_d(two_j, exp_su2(t * Vec3::Unit(a)));
      CHECK((direct - viagrp).norm() < 1e-11);
    }
  }
}
