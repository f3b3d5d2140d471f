#include "holotriple/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace holo {

namespace {

Vec random_unit(long dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (long i = 0; i < dim; ++i) v[i] = cd(g(rng), g(rng));
  v /= v.norm();
  return v;
}

}  // namespace

bool is_self_adjoint(const SparseOperator& a, double tol, unsigned seed) {
  long dim = a.space()->total_dim;
  if (dim <= 2048) {
    SpMat m = a.materialize(2048);
    SpMat d = SpMat(m - SpMat(m.adjoint()));
    double base = std::max(1.0, m.norm());
    return d.norm() <= tol * base;
  }
  for (int probe = 0; probe < 8; ++probe) {
    Vec x = random_unit(dim, seed + 2 * probe);
    Vec y = random_unit(dim, seed + 2 * probe + 1);
    Vec ax = a.apply(x);
    Vec ay = a.apply(y);
    cd lhs = y.dot(ax);  // <y, A x>
    cd rhs = ay.dot(x);  // <A y, x>
    double base = std::max({1.0, ax.norm(), ay.norm()});
    if (std::abs(lhs - rhs) > tol * base) return false;
  }
  return true;
}

std::vector<double> spectrum_full(const SparseOperator& a, double sa_tol) {
  if (a.space()->total_dim > 4096)
    throw std::runtime_error("spectrum_full: dimension above dense limit");
  if (!is_self_adjoint(a, sa_tol))
    throw std::runtime_error("spectrum: operator violates self-adjointness");
  Mat m = a.dense(4096);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + Mat(m.adjoint())),
                                        Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

ExtremalEigs lanczos_extremal(const SparseOperator& a, int k_low, int k_high,
                              int maxit, double tol, unsigned seed) {
  long dim = a.space()->total_dim;
  int want = std::max(k_low, 0) + std::max(k_high, 0);
  if (want == 0) throw std::invalid_argument("lanczos: nothing requested");
  int m_cap = static_cast<int>(std::min<long>(dim, maxit));

  std::vector<Vec> basis;
  basis.push_back(random_unit(dim, seed));
  std::vector<double> alpha, beta;
  ExtremalEigs out;

  auto ritz = [&](int m, Eigen::VectorXd& vals, Eigen::MatrixXd& vecs) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    vals = es.eigenvalues();
    vecs = es.eigenvectors();
  };

  double last_beta = 0.0;
  for (int it = 0; it < m_cap; ++it) {
    Vec w = a.apply(basis[it]);
    cd ad = basis[it].dot(w);
    alpha.push_back(ad.real());
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& v : basis) w -= v.dot(w) * v;
    double b = w.norm();
    out.iterations = it + 1;
    int m = it + 1;
    bool exhausted = (m == dim);
    if (b < 1e-12 || exhausted || m == m_cap) {
      if (b >= 1e-12 && m == m_cap && m < dim) {
        // Budget reached; report what converged.
      }
      last_beta = b;
      break;
    }
    beta.push_back(b);
    basis.push_back(w / b);
    last_beta = b;

    if (m >= want + 2 && m % 5 == 0) {
      Eigen::VectorXd vals;
      Eigen::MatrixXd vecs;
      ritz(m, vals, vecs);
      double resid = 0.0;
      for (int i = 0; i < k_low; ++i)
        resid = std::max(resid, std::abs(b * vecs(m - 1, i)));
      for (int i = 0; i < k_high; ++i)
        resid = std::max(resid, std::abs(b * vecs(m - 1, m - 1 - i)));
      double scale = std::max(1.0, std::max(std::abs(vals[0]),
                                            std::abs(vals[m - 1])));
      if (resid <= tol * scale) break;
    }
  }

  int m = static_cast<int>(alpha.size());
  Eigen::VectorXd vals;
  Eigen::MatrixXd vecs;
  ritz(m, vals, vecs);
  double scale =
      std::max(1.0, std::max(std::abs(vals[0]), std::abs(vals[m - 1])));
  out.residual = 0.0;
  for (int i = 0; i < std::min(k_low, m); ++i) {
    out.low.push_back(vals[i]);
    out.residual =
        std::max(out.residual, std::abs(last_beta * vecs(m - 1, i)) / scale);
  }
  std::vector<double> hi;
  for (int i = 0; i < std::min(k_high, m); ++i) {
    hi.push_back(vals[m - 1 - i]);
    out.residual = std::max(
        out.residual, std::abs(last_beta * vecs(m - 1, m - 1 - i)) / scale);
  }
  std::sort(hi.begin(), hi.end());
  out.high = hi;
  return out;
}

std::vector<double> spectrum(const SparseOperator& a, int k) {
  if (!is_self_adjoint(a))
    throw std::runtime_error("spectrum: operator violates self-adjointness");
  long dim = a.space()->total_dim;
  if (k <= 0) return spectrum_full(a);
  if (k >= dim) return spectrum_full(a);
  int k_low = (k + 1) / 2, k_high = k / 2;
  ExtremalEigs e = lanczos_extremal(a, k_low, k_high);
  std::vector<double> out = e.low;
  out.insert(out.end(), e.high.begin(), e.high.end());
  std::sort(out.begin(), out.end());
  return out;
}

double op_norm(const SparseOperator& a, bool self_adjoint, int maxit,
               unsigned seed) {
  if (a.space()->total_dim == 1) {
    Vec one = Vec::Ones(1);
    return a.apply(one).norm();
  }
  if (self_adjoint) {
    ExtremalEigs e = lanczos_extremal(a, 1, 1, maxit, 1e-12, seed);
    double lo = e.low.empty() ? 0.0 : std::abs(e.low[0]);
    double hi = e.high.empty() ? 0.0 : std::abs(e.high[0]);
    return std::max(lo, hi);
  }
  SparseOperator normal = a.adjoint() * a;
  ExtremalEigs e = lanczos_extremal(normal, 0, 1, maxit, 1e-12, seed);
  return e.high.empty() ? 0.0 : std::sqrt(std::max(0.0, e.high[0]));
}

}  // namespace holo
