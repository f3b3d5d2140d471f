#include "holotriple/dirac.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "holotriple/spectrum.hpp"
#include "holotriple/su2.hpp"

namespace holo {

namespace {

SpMat sp2(const Mat2& m) {
  SpMat s(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (m(r, c) != cd(0.0)) s.insert(r, c) = m(r, c);
  s.makeCompressed();
  return s;
}

Mat dense_kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PathWord letter_word(const CubicLattice& lat, int l) {
  PathWord w;
  w.letters = {l};
  w.base = letter_start(lat, l);
  return w;
}

}  // namespace

SparseOperator dirac_op(const CompositeSpace* sp, const CliffordFactor& cf,
                        const std::vector<double>& alphas) {
  int ne = static_cast<int>(sp->edges.size());
  if (static_cast<int>(alphas.size()) != ne)
    throw std::invalid_argument("dirac_op: coefficient count mismatch");
  if (cf.num_gens != 3 * ne || sp->clifford_gens != 3 * ne)
    throw std::invalid_argument("dirac_op: needs 3 generators per edge");
  std::vector<KronTerm> terms;
  for (int i = 0; i < ne; ++i) {
    for (int a = 0; a < 3; ++a) {
      KronTerm t;
      t.coeff = cd(alphas[i]);
      t.factors.push_back({i, flux_sa_local(sp->edges[i], a)});
      t.factors.push_back({sp->clifford_factor(), cf.gens[3 * i + a]});
      terms.push_back(std::move(t));
    }
  }
  return SparseOperator::leaf(sp, std::move(terms));
}

SparseOperator dirac_letter_commutator(const CubicLattice& lat,
                                       const CompositeSpace* sp,
                                       const CliffordFactor& cf,
                                       const std::vector<double>& alphas,
                                       int letter) {
  int e = letter_edge(letter);
  int f = sp->factor_of_edge(e);
  if (f < 0)
    throw std::invalid_argument("dirac_letter_commutator: edge not in space");
  PathWord p = letter_word(lat, letter);
  int vf = -1, vt = -1;
  if (sp->vertex_dim > 1) {
    vf = word_start(lat, p);
    vt = word_end(lat, p);
  }
  std::vector<KronTerm> all;
  for (int a = 0; a < 3; ++a) {
    std::vector<WordItem> items;
    if (letter_forward(letter)) {
      items.push_back(WordItem::lett(letter));
      items.push_back(WordItem::mat(0.5 * sigma(a)));
    } else {
      items.push_back(WordItem::mat(-0.5 * sigma(a)));
      items.push_back(WordItem::lett(letter));
    }
    auto entries = word_entry_terms(lat, *sp, items);
    for (int r0 = 0; r0 < 2; ++r0)
      for (int rk = 0; rk < 2; ++rk)
        for (const auto& t : entries[r0][rk]) {
          KronTerm full = t;
          full.coeff *= alphas[f];
          full.factors.push_back({sp->clifford_factor(), cf.gens[3 * f + a]});
          Mat2 u = Mat2::Zero();
          u(r0, rk) = 1.0;
          full.factors.push_back({sp->spinor_factor(), sp2(u)});
          if (vf >= 0) {
            SpMat ev(sp->vertex_dim, sp->vertex_dim);
            ev.insert(sp->slot_of_vertex(vf), sp->slot_of_vertex(vt)) =
                cd(1.0);
            ev.makeCompressed();
            full.factors.push_back({sp->vertex_factor(), ev});
          }
          all.push_back(std::move(full));
        }
  }
  return SparseOperator::leaf(sp, std::move(all));
}

SparseOperator fluctuated_dirac(const CubicLattice& lat,
                                const CompositeSpace* sp,
                                const SparseOperator& d,
                                const WeightedFlow& flow) {
  std::vector<SparseOperator> parts = {d};
  for (const auto& [p, w] : flow.entries)
    parts.push_back(commutator(d, holonomy_op(lat, sp, p)).scaled(w));
  return SparseOperator::sum(std::move(parts));
}

SparseOperator hamiltonian_constraint_op(const CubicLattice& lat,
                                         const CompositeSpace* sp,
                                         const std::array<int, 4>& letters,
                                         double t, double prefactor) {
  PathWord loop;
  loop.letters = {letters[0], letters[1], letters[2], letters[3]};
  loop.base = letter_start(lat, letters[0]);
  check_path(lat, loop);
  if (word_end(lat, loop) != loop.base)
    throw std::invalid_argument("hamiltonian_constraint_op: word not closed");
  if (sp->spinor_dim != 2)
    throw std::invalid_argument(
        "hamiltonian_constraint_op: needs a spinor factor");

  auto hol = [&](int l) { return holonomy_op(lat, sp, letter_word(lat, l)); };
  auto spin = [&](int a) {
    KronTerm kt;
    kt.factors.push_back({sp->spinor_factor(), sp2(sigma(a))});
    return SparseOperator::leaf(sp, {kt});
  };
  auto paired = [&](int l, int a) {
    int f = sp->factor_of_edge(letter_edge(l));
    if (f < 0)
      throw std::invalid_argument(
          "hamiltonian_constraint_op: edge not in space");
    KronTerm kt;
    kt.coeff = cd(t);
    kt.factors.push_back({f, flux_sa_local(sp->edges[f], a)});
    return anticommutator(SparseOperator::leaf(sp, {kt}), hol(l));
  };

  std::vector<SparseOperator> parts;
  for (int m = 0; m < 4; ++m) {
    int l0 = letters[m % 4], l1 = letters[(m + 1) % 4];
    int l2 = letters[(m + 2) % 4], l3 = letters[(m + 3) % 4];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        parts.push_back(SparseOperator::prod(
            {paired(l0, a), spin(a), paired(l1, b), spin(b), hol(l2),
             hol(l3)}));
        parts.push_back(SparseOperator::prod({paired(l0, b), spin(b),
                                              paired(l1, a), spin(a), hol(l2),
                                              hol(l3)})
                            .scaled(-1.0));
      }
    }
  }
  return SparseOperator::sum(std::move(parts)).scaled(prefactor);
}

std::vector<int> diffeo_edge_permutation(const CubicLattice& lat,
                                         const LatticeDiffeo& d,
                                         bool* all_forward) {
  std::vector<int> perm(lat.num_edges(), -1);
  bool fwd = true;
  for (int e = 0; e < lat.num_edges(); ++e) {
    const PathWord& p = d.edge_paths[e];
    if (p.letters.size() != 1) {
      if (all_forward) *all_forward = false;
      return {};
    }
    perm[e] = letter_edge(p.letters[0]);
    if (!letter_forward(p.letters[0])) fwd = false;
  }
  if (all_forward) *all_forward = fwd;
  return perm;
}

double structural_commutator_norm(const CubicLattice& lat, int two_jmax,
                                  const std::vector<double>& alphas,
                                  const LatticeDiffeo& d) {
  bool fwd = false;
  std::vector<int> perm = diffeo_edge_permutation(lat, d, &fwd);
  if (perm.empty() || !fwd)
    throw std::invalid_argument(
        "structural_commutator_norm: needs forward single-letter images");
  if (static_cast<int>(alphas.size()) != lat.num_edges())
    throw std::invalid_argument(
        "structural_commutator_norm: coefficient count mismatch");
  std::vector<int> inv(perm.size());
  for (size_t e = 0; e < perm.size(); ++e) inv[perm[e]] = static_cast<int>(e);
  double s2 = 0.0;
  for (size_t e = 0; e < perm.size(); ++e) {
    double b = alphas[e] - alphas[inv[e]];
    s2 += b * b;
  }
  return (0.5 * two_jmax + 1.0) * std::sqrt(s2);
}

Mat clifford_intertwiner(const CliffordFactor& cf,
                         const std::vector<Mat>& targets) {
  if (targets.size() != static_cast<size_t>(cf.num_gens))
    throw std::invalid_argument("clifford_intertwiner: target count mismatch");
  long d = cf.dim;
  Mat id = Mat::Identity(d, d);
  Mat a(cf.num_gens * d * d, d * d);
  for (int p = 0; p < cf.num_gens; ++p) {
    Mat g = Mat(cf.gens[p]);
    a.block(p * d * d, 0, d * d, d * d) =
        dense_kron(id, targets[p]) - dense_kron(g.transpose(), id);
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  double smin = sv(sv.size() - 1);
  if (smin > 1e-8 * std::max(smax, 1.0))
    throw std::runtime_error("clifford_intertwiner: no solution");
  Vec v = svd.matrixV().col(sv.size() - 1);
  Mat u(d, d);
  for (long j = 0; j < d; ++j) u.col(j) = v.segment(j * d, d);
  Mat gram = u.adjoint() * u;
  cd c = gram.trace() / static_cast<double>(d);
  if ((gram - c * id).norm() > 1e-8 * std::abs(c) * d)
    throw std::runtime_error("clifford_intertwiner: solution not unitary");
  u /= std::sqrt(std::abs(c));
  for (int p = 0; p < cf.num_gens; ++p) {
    if ((u * Mat(cf.gens[p]) * u.adjoint() - targets[p]).norm() > 1e-7)
      throw std::runtime_error("clifford_intertwiner: relation residual");
  }
  return u;
}

SpMat inversion_local(const EdgeSpace& s) {
  std::vector<Eigen::Triplet<cd>> trips;
  for (const auto& lab : s.labels) {
    int half = (lab.two_n - lab.two_m) / 2;
    double ph = (half % 2 == 0) ? 1.0 : -1.0;
    trips.emplace_back(s.index(lab.two_j, -lab.two_n, -lab.two_m),
                       s.index(lab.two_j, lab.two_m, lab.two_n), cd(ph));
  }
  SpMat m(s.dim, s.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

DiffeoNormReport dense_commutator_norm(const CubicLattice& lat,
                                       const CompositeSpace* sp,
                                       const CliffordFactor& cf,
                                       const std::vector<double>& alphas,
                                       const LatticeDiffeo& d) {
  bool fwd = false;
  std::vector<int> perm = diffeo_edge_permutation(lat, d, &fwd);
  if (perm.empty())
    throw std::invalid_argument(
        "dense_commutator_norm: needs single-letter images");
  DiffeoNormReport rep;
  rep.flips = !fwd;

  int ne = static_cast<int>(sp->edges.size());
  std::vector<int> factor_perm(sp->num_factors());
  for (int k = 0; k < sp->num_factors(); ++k) factor_perm[k] = k;
  for (int k = 0; k < ne; ++k) {
    int img = sp->factor_of_edge(perm[sp->edge_ids[k]]);
    if (img < 0)
      throw std::invalid_argument(
          "dense_commutator_norm: image edge not in space");
    factor_perm[k] = img;
  }
  SparseOperator ugeom = factor_permutation(sp, factor_perm);

  KronTerm wterm;
  for (int k = 0; k < ne; ++k) {
    const PathWord& p = d.edge_paths[sp->edge_ids[k]];
    if (!letter_forward(p.letters[0]))
      wterm.factors.push_back({k, inversion_local(sp->edges[k])});
  }
  SparseOperator winv = SparseOperator::leaf(sp, {wterm});

  SparseOperator ucl = SparseOperator::identity(sp);
  std::vector<Mat> targets(cf.num_gens);
  for (int k = 0; k < ne; ++k)
    for (int a = 0; a < 3; ++a)
      targets[3 * k + a] = Mat(cf.gens[3 * factor_perm[k] + a]);
  try {
    Mat u = clifford_intertwiner(cf, targets);
    KronTerm ct;
    ct.factors.push_back(
        {sp->clifford_factor(), sparse_from_dense(u, 1e-14)});
    ucl = SparseOperator::leaf(sp, {ct});
    rep.clifford_ok = true;
  } catch (const std::runtime_error&) {
    rep.clifford_ok = false;
  }

  SparseOperator u = SparseOperator::prod({ucl, ugeom, winv});
  SparseOperator dd = dirac_op(sp, cf, alphas);
  rep.norm = op_norm(commutator(dd, u), false);
  return rep;
}

}  // namespace holo
