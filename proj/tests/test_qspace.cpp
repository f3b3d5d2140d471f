#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holotriple/clifford.hpp"
#include "holotriple/linop.hpp"
#include "holotriple/spaces.hpp"
#include "holotriple/spectrum.hpp"
#include "holotriple/su2.hpp"

using namespace holo;

namespace {

std::mt19937 rng(2024);

Mat random_dense(int d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cd(u(rng), u(rng));
  return m;
}

Vec random_vec(long d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(d);
  for (long i = 0; i < d; ++i) v[i] = cd(u(rng), u(rng));
  return v;
}

KronTerm random_term(const CompositeSpace& space, std::vector<int> factors) {
  KronTerm t;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  t.coeff = cd(u(rng), u(rng));
  for (int f : factors) {
    int d = static_cast<int>(space.factor_dims[f]);
    t.factors.push_back({f, sparse_from_dense(random_dense(d), 0.5)});
  }
  return t;
}

}  // namespace

TEST_CASE("shell space dimensions") {
  CHECK(make_edge_space(0).dim == 1);
  CHECK(make_edge_space(1).dim == 5);
  CHECK(make_edge_space(2).dim == 14);
  CHECK(make_edge_space(4).dim == 55);
  CHECK(make_edge_space(6).dim == 140);
  auto s = make_edge_space(4);
  CHECK(static_cast<int>(s.labels.size()) == s.dim);
  for (int i = 0; i < s.dim; ++i) {
    auto lab = s.labels[i];
    CHECK(s.index(lab.two_j, lab.two_m, lab.two_n) == i);
  }
}

TEST_CASE("composite factor layout") {
  auto c = make_composite_uniform(2, 1, 2, true, 3);
  CHECK(c.factor_dims == std::vector<long>{5, 5, 2, 2, 3});
  CHECK(c.total_dim == 300);
  CHECK(c.strides == std::vector<long>{60, 12, 6, 3, 1});
  CHECK(c.clifford_factor() == 2);
  CHECK(c.spinor_factor() == 3);
  CHECK(c.vertex_factor() == 4);
  CHECK(c.factor_of_edge(1) == 1);
  CHECK(c.factor_of_edge(7) == -1);
  CHECK_THROWS(make_composite_uniform(40, 8, 0, false, 1));
}

TEST_CASE("anticommuting involutions") {
  auto k1 = clifford_generators(1);
  CHECK(k1.dim == 2);
  CHECK((Mat(k1.gens[0]) - sigma(2)).norm() == 0.0);

  auto k3 = clifford_generators(3);
  CHECK(k3.dim == 2);
  for (int a = 0; a < 3; ++a) CHECK((Mat(k3.gens[a]) - sigma(a)).norm() == 0.0);

  for (int k : {2, 4, 5, 6, 7}) {
    auto f = clifford_generators(k);
    CHECK(f.dim == (1L << (k / 2)));
    Mat id = Mat::Identity(f.dim, f.dim);
    for (int p = 0; p < k; ++p) {
      Mat gp = Mat(f.gens[p]);
      CHECK((gp - gp.adjoint()).norm() == 0.0);
      CHECK(std::abs(gp.trace()) == 0.0);
      for (int q = 0; q <= p; ++q) {
        Mat gq = Mat(f.gens[q]);
        Mat anti = gp * gq + gq * gp;
        if (p == q) {
          CHECK((anti - 2.0 * id).norm() == 0.0);
          CHECK(std::abs((gp * gq).trace() - cd(f.dim)) == 0.0);
        } else {
          CHECK(anti.norm() == 0.0);
          CHECK(std::abs((gp * gq).trace()) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("lazy application matches materialization") {
  auto c = make_composite_uniform(2, 1, 2, true, 3);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<KronTerm> ta = {random_term(c, {0, 3}), random_term(c, {1}),
                                random_term(c, {2, 4})};
    std::vector<KronTerm> tb = {random_term(c, {0, 1, 4}), random_term(c, {3})};
    auto a = SparseOperator::leaf(&c, ta);
    auto b = SparseOperator::leaf(&c, tb);
    auto expr = (a + b) * a.adjoint() - cd(0.5, 0.25) * b;
    Mat m = expr.dense();
    Vec x = random_vec(c.total_dim);
    CHECK((expr.apply(x) - m * x).norm() <= 1e-12 * std::max(1.0, m.norm()));

    // Linearity and adjoint involution.
    Vec y = random_vec(c.total_dim);
    CHECK((a.apply(x + y) - a.apply(x) - a.apply(y)).norm() < 1e-12);
    CHECK((a.adjoint().adjoint().apply(x) - a.apply(x)).norm() < 1e-13);
    CHECK((a.adjoint().dense() - Mat(m = a.dense()).adjoint()).norm() < 1e-13);

    // (A+B)x = Ax + Bx.
    CHECK(((a + b).apply(x) - a.apply(x) - b.apply(x)).norm() < 1e-12);
    // (A*B)x = A(Bx).
    CHECK(((a * b).apply(x) - a.apply(b.apply(x))).norm() < 1e-12);
  }

  auto id = SparseOperator::identity(&c);
  Vec x = random_vec(c.total_dim);
  CHECK((id.apply(x) - x).norm() == 0.0);
  CHECK(SparseOperator::zero(&c).apply(x).norm() == 0.0);
}

TEST_CASE("factor swap unitary") {
  auto c = make_composite_uniform(2, 1, 0, true, 1);
  std::vector<int> perm = {1, 0, 2, 3, 4};
  auto u = factor_permutation(&c, perm);
  Mat um = u.dense();
  CHECK((um * um.adjoint() - Mat::Identity(c.total_dim, c.total_dim)).norm() <
        1e-13);

  // Conjugation moves a factor-0 block to factor 1.
  KronTerm t;
  t.factors.push_back({0, sparse_from_dense(random_dense(5), 0.0)});
  auto a = SparseOperator::leaf(&c, {t});
  KronTerm t2;
  t2.factors.push_back({1, t.factors[0].op});
  auto b = SparseOperator::leaf(&c, {t2});
  CHECK((um * a.dense() * um.adjoint() - b.dense()).norm() < 1e-12);
}

TEST_CASE("spectra") {
  auto c = make_composite_uniform(1, 2, 0, true, 1);  // dim 28
  auto zero = SparseOperator::zero(&c);
  auto sz = spectrum(zero);
  for (double v : sz) CHECK(v == 0.0);

  KronTerm t;
  t.factors.push_back({c.spinor_factor(), sparse_from_dense(sigma(2), 0.0)});
  auto s3 = SparseOperator::leaf(&c, {t});
  auto sp = spectrum(s3);
  CHECK(static_cast<int>(sp.size()) == 28);
  for (int i = 0; i < 14; ++i) CHECK(sp[i] == doctest::Approx(-1.0));
  for (int i = 14; i < 28; ++i) CHECK(sp[i] == doctest::Approx(1.0));

  // Krylov extremes against the dense oracle.
  auto big = make_composite_uniform(2, 1, 2, true, 3);
  std::vector<KronTerm> terms = {random_term(big, {0, 2}),
                                 random_term(big, {1, 3, 4}),
                                 random_term(big, {2})};
  auto r = SparseOperator::leaf(&big, terms);
  auto h = r + r.adjoint();
  auto full = spectrum_full(h);
  auto ext = lanczos_extremal(h, 2, 2);
  CHECK(ext.low[0] == doctest::Approx(full.front()).epsilon(1e-8));
  CHECK(ext.high.back() == doctest::Approx(full.back()).epsilon(1e-8));

  CHECK(op_norm(h, true) ==
        doctest::Approx(std::max(std::abs(full.front()), std::abs(full.back())))
            .epsilon(1e-8));
  Eigen::JacobiSVD<Mat> svd(r.dense());
  CHECK(op_norm(r, false) ==
        doctest::Approx(svd.singularValues()[0]).epsilon(1e-7));

  CHECK_THROWS(spectrum(r));  // not self-adjoint
}
