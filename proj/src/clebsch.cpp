#include "holotriple/clebsch.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "holotriple/su2.hpp"

namespace holo {

int CGTable::row(int two_m1, int two_m2) const {
  int i1 = (two_j1 - two_m1) / 2;
  int i2 = (two_j2 - two_m2) / 2;
  return i1 * (two_j2 + 1) + i2;
}

int CGTable::col(int two_j, int two_m) const {
  int c = 0;
  for (int tj = two_j1 + two_j2; tj > two_j; tj -= 2) c += tj + 1;
  return c + (two_j - two_m) / 2;
}

double CGTable::coeff(int two_m1, int two_m2, int two_j, int two_m) const {
  if (two_m1 + two_m2 != two_m) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2) return 0.0;
  if (two_j < std::abs(two_j1 - two_j2) || two_j > two_j1 + two_j2) return 0.0;
  if ((two_j + two_j1 + two_j2) % 2 != 0) return 0.0;
  if (std::abs(two_m) > two_j) return 0.0;
  return u(row(two_m1, two_m2), col(two_j, two_m));
}

namespace {

Eigen::MatrixXd real_kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::unique_ptr<CGTable> build_table(int two_j1, int two_j2) {
  auto t = std::make_unique<CGTable>();
  t->two_j1 = two_j1;
  t->two_j2 = two_j2;
  int d1 = two_j1 + 1, d2 = two_j2 + 1, d = d1 * d2;
  t->u.setZero(d, d);

  Eigen::MatrixXd id1 = Eigen::MatrixXd::Identity(d1, d1);
  Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(d2, d2);
  Eigen::MatrixXd lower = real_kron(jminus(two_j1).real(), id2) +
                          real_kron(id1, jminus(two_j2).real());

  int hi = two_j1 + two_j2;
  int lo = std::abs(two_j1 - two_j2);
  for (int tj = hi; tj >= lo; tj -= 2) {
    // Highest-weight vector at m = j: the unit vector in the m-level that is
    // orthogonal to every multiplet already built above this j.
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    double best = -1.0;
    Eigen::VectorXd pick;
    for (int two_m1 = two_j1; two_m1 >= -two_j1; two_m1 -= 2) {
      int two_m2 = tj - two_m1;
      if (std::abs(two_m2) > two_j2) continue;
      Eigen::VectorXd seed = Eigen::VectorXd::Zero(d);
      seed[t->row(two_m1, two_m2)] = 1.0;
      for (int tjp = hi; tjp > tj; tjp -= 2) {
        Eigen::VectorXd w = t->u.col(t->col(tjp, tj));
        seed -= w.dot(seed) * w;
      }
      if (seed.norm() > best) {
        best = seed.norm();
        pick = seed;
      }
    }
    if (best < 1e-8) throw std::runtime_error("cg: degenerate m-level");
    v = pick / pick.norm();
    if (v[t->row(two_j1, tj - two_j1)] < 0.0) v = -v;
    t->u.col(t->col(tj, tj)) = v;

    double jj = jj1(tj);
    for (int tm = tj - 2; tm >= -tj; tm -= 2) {
      double mprev = 0.5 * (tm + 2);
      v = lower * v / std::sqrt(jj - mprev * (mprev - 1.0));
      t->u.col(t->col(tj, tm)) = v;
    }
  }

  t->col_two_j.resize(d);
  t->col_two_m.resize(d);
  for (int tj = hi; tj >= lo; tj -= 2)
    for (int tm = tj; tm >= -tj; tm -= 2) {
      int c = t->col(tj, tm);
      t->col_two_j[c] = tj;
      t->col_two_m[c] = tm;
    }
  return t;
}

}  // namespace

const CGTable& cg_table(int two_j1, int two_j2) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<CGTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(two_j1, two_j2);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_table(two_j1, two_j2)).first;
  return *it->second;
}

double cg_coeff(int two_j1, int two_m1, int two_j2, int two_m2, int two_j,
                int two_m) {
  return cg_table(two_j1, two_j2).coeff(two_m1, two_m2, two_j, two_m);
}

}  // namespace holo
