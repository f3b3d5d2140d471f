#include "holotriple/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "holotriple/clifford.hpp"
#include "holotriple/su2.hpp"

namespace holo {

namespace {

double phase_nm(int two_m, int two_n) {
  return ((two_n - two_m) / 2) % 2 == 0 ? 1.0 : -1.0;
}

FuncPW pw_add(const FuncPW& a, const FuncPW& b) {
  FuncPW out = a;
  for (const auto& [k, v] : b) out[k] += v;
  return out;
}

FuncPW tag_func(const FuncTag& f) {
  if (f.kind == FuncTag::kUnit) return pw_scalar(1.0);
  if (f.kind == FuncTag::kCharacter)
    return pw_add(pw_matrix_entry(0, 0, false), pw_matrix_entry(1, 1, false));
  if (f.r < 0 || f.r > 1 || f.c < 0 || f.c > 1)
    throw std::invalid_argument("tag_func: entry out of range");
  return pw_matrix_entry(f.r, f.c, false);
}

int poly_degree(const std::vector<Monomial>& poly) {
  int deg = 0;
  for (const auto& m : poly) {
    int d = m.powers[0] + m.powers[1] + m.powers[2];
    if (m.powers[0] < 0 || m.powers[1] < 0 || m.powers[2] < 0)
      throw std::invalid_argument("poly_degree: negative exponent");
    deg = std::max(deg, d);
  }
  return deg;
}

}  // namespace

Mat2 coherent_group_label(const CoherentLabel& l, const ComplexifierScheme& s) {
  Vec3 b = s.boost_sign * s.s_cal * s.flux_scale * l.p;
  return l.u * boost_su2(b);
}

Vec coherent_coeffs(const CoherentLabel& l, const EdgeSpace& space,
                    const ComplexifierScheme& s) {
  if (l.t <= 0.0) throw std::invalid_argument("coherent_coeffs: t <= 0");
  Mat2 h = coherent_group_label(l, s);
  Vec c = Vec::Zero(space.dim);
  for (int tj = 0; tj <= space.two_jmax; ++tj) {
    Mat wd = wigner_d(tj, h);
    double amp = std::sqrt(tj + 1.0) * std::exp(-l.t * jj1(tj));
    for (int tm = tj; tm >= -tj; tm -= 2)
      for (int tn = tj; tn >= -tj; tn -= 2)
        c[space.index(tj, tm, tn)] = amp * phase_nm(tm, tn) *
                                     wd((tj + tm) / 2, (tj + tn) / 2);
  }
  return c;
}

Vec coherent_edge_vec(const CoherentLabel& l, const EdgeSpace& space,
                      const ComplexifierScheme& s) {
  Vec c = coherent_coeffs(l, space, s);
  double n = c.norm();
  if (n == 0.0) throw std::runtime_error("coherent_edge_vec: zero state");
  return c / n;
}

double coherent_shell_weight(const CoherentLabel& l, int two_j,
                             const ComplexifierScheme& s) {
  Mat2 h = coherent_group_label(l, s);
  double amp = std::exp(-2.0 * l.t * jj1(two_j));
  return (two_j + 1.0) * amp * wigner_d(two_j, h).squaredNorm();
}

TailReport coherent_tail(const CoherentLabel& l, const EdgeSpace& space,
                         const ComplexifierScheme& s, int two_jmax_ref) {
  if (two_jmax_ref <= space.two_jmax)
    two_jmax_ref = 2 * space.two_jmax + 16;
  TailReport r;
  double kept = 0.0, kept_top = 0.0, total = 0.0, above = 0.0;
  for (int tj = 0; tj <= two_jmax_ref; ++tj) {
    double w = coherent_shell_weight(l, tj, s);
    total += w;
    if (tj <= space.two_jmax) {
      kept += w;
      if (tj > space.two_jmax - 2) kept_top += w;
    } else {
      above += w;
    }
  }
  r.kept_top_fraction = kept > 0.0 ? kept_top / kept : 0.0;
  r.residue = total > 0.0 ? above / total : 0.0;
  return r;
}

cd coherent_overlap(const CoherentLabel& a, const CoherentLabel& b,
                    const EdgeSpace& space, const ComplexifierScheme& s) {
  return coherent_edge_vec(a, space, s).dot(coherent_edge_vec(b, space, s));
}

Mat2 holonomy_expectation(const CoherentLabel& l, const EdgeSpace& space,
                          const ComplexifierScheme& s) {
  Vec phi = coherent_edge_vec(l, space, s);
  Mat2 e;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      SpMat m = mult_local(space, pw_matrix_entry(r, c, false));
      e(r, c) = phi.dot(m * phi);
    }
  return e;
}

cd flux_expectation(const CoherentLabel& l, const EdgeSpace& space, int a,
                    const ComplexifierScheme& s) {
  Vec phi = coherent_edge_vec(l, space, s);
  return l.t * phi.dot(flux_local(space, a) * phi);
}

cd polynomial_expectation(const CoherentLabel& l, const EdgeSpace& space,
                          const FuncTag& f, const std::vector<Monomial>& poly,
                          const ComplexifierScheme& s) {
  int deg = poly_degree(poly);
  if (deg > 4)
    throw std::invalid_argument("polynomial_expectation: degree > 4");
  if (space.two_jmax < 2 * deg)
    throw std::invalid_argument(
        "polynomial_expectation: truncation below degree guard");
  Vec phi = coherent_edge_vec(l, space, s);
  SpMat fm = mult_local(space, tag_func(f));
  std::array<SpMat, 3> lm = {flux_local(space, 0), flux_local(space, 1),
                             flux_local(space, 2)};
  cd out = 0.0;
  for (const auto& mono : poly) {
    Vec v = phi;
    for (int a = 2; a >= 0; --a)
      for (int k = 0; k < mono.powers[a]; ++k) v = l.t * (lm[a] * v);
    out += mono.coeff * phi.dot(fm * v);
  }
  return out;
}

cd polynomial_classical(const CoherentLabel& l, const FuncTag& f,
                        const std::vector<Monomial>& poly,
                        const ComplexifierScheme& s) {
  cd fval = 1.0;
  if (f.kind == FuncTag::kCharacter) fval = l.u(0, 0) + l.u(1, 1);
  if (f.kind == FuncTag::kEntry) fval = l.u(f.r, f.c);
  cd out = 0.0;
  for (const auto& mono : poly) {
    cd term = mono.coeff;
    for (int a = 0; a < 3; ++a) {
      cd x = im * s.flux_scale * l.p[a];
      for (int k = 0; k < mono.powers[a]; ++k) term *= x;
    }
    out += term;
  }
  return fval * out;
}

Extrapolation richardson1(const std::vector<double>& ts,
                          const std::vector<cd>& values) {
  if (ts.size() != values.size() || ts.size() < 2)
    throw std::invalid_argument("richardson1: need matching grids, size >= 2");
  for (size_t k = 1; k < ts.size(); ++k)
    if (!(ts[k] < ts[k - 1]))
      throw std::invalid_argument("richardson1: grid must decrease");
  std::vector<cd> e;
  for (size_t k = 0; k + 1 < ts.size(); ++k)
    e.push_back(2.0 * values[k + 1] - values[k]);
  Extrapolation out;
  out.value = e.back();
  out.residual = e.size() >= 2 ? std::abs(e[e.size() - 1] - e[e.size() - 2])
                               : std::abs(e[0] - values.back());
  return out;
}

StateVector coherent_product_state(const CompositeSpace* sp,
                                   const std::vector<CoherentLabel>& labels,
                                   const ComplexifierScheme& s,
                                   const Vec& clifford_ref,
                                   const Vec& spinor_ref,
                                   const Vec& vertex_ref) {
  if (labels.size() != sp->edges.size())
    throw std::invalid_argument("coherent_product_state: label count");
  std::vector<Vec> parts;
  for (size_t i = 0; i < labels.size(); ++i)
    parts.push_back(coherent_edge_vec(labels[i], sp->edges[i], s));
  auto ref_or_unit = [](const Vec& r, long dim, bool uniform) {
    if (r.size() > 0) {
      if (r.size() != dim)
        throw std::invalid_argument("coherent_product_state: ref size");
      return Vec(r / r.norm());
    }
    Vec v = Vec::Zero(dim);
    if (uniform)
      v.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
    else
      v[0] = 1.0;
    return v;
  };
  parts.push_back(ref_or_unit(clifford_ref, sp->clifford_dim, false));
  parts.push_back(ref_or_unit(spinor_ref, sp->spinor_dim, false));
  parts.push_back(ref_or_unit(vertex_ref, sp->vertex_dim, true));
  return StateVector{sp, kron_vec(parts)};
}

Mat2 word_expectation_matrix(const CubicLattice& lat, const CompositeSpace* sp,
                             const ClassicalPhasePoint& ph, double t,
                             const ComplexifierScheme& s, const PathWord& w) {
  if (sp->spinor_dim != 2)
    throw std::invalid_argument("word_expectation_matrix: needs spinor");
  std::vector<CoherentLabel> labels;
  for (size_t i = 0; i < sp->edges.size(); ++i) {
    int e = sp->edge_ids[i];
    labels.push_back({ph.holonomies[e], ph.fluxes[e], t});
  }
  SparseOperator op = holonomy_op(lat, sp, w);
  Mat2 out;
  std::array<StateVector, 2> refs;
  for (int r = 0; r < 2; ++r) {
    Vec sr = Vec::Zero(2);
    sr[r] = 1.0;
    refs[r] = coherent_product_state(sp, labels, s, Vec(), sr, Vec());
  }
  for (int c = 0; c < 2; ++c) {
    Vec applied = op.apply(refs[c].coeffs);
    for (int r = 0; r < 2; ++r) out(r, c) = refs[r].coeffs.dot(applied);
  }
  return out;
}

Mat2 LapseShift::matrix() const {
  Mat2 m = lapse * Mat2::Identity();
  for (int a = 0; a < 3; ++a) m += shift[a] * sigma(a);
  return m;
}

Mat2 quaternionic(double w, const Vec3& x) {
  Mat2 m = w * Mat2::Identity();
  for (int a = 0; a < 3; ++a) m += im * x[a] * sigma(a);
  return m;
}

DressedState dressed_state(const CubicLattice& lat, const CompositeSpace* sp,
                           const ClassicalPhasePoint& ph,
                           const SpinorField& psi, double t,
                           const ComplexifierScheme& s, double insertion_amp,
                           const LapseShift* ls) {
  int ne = static_cast<int>(sp->edges.size());
  if (ne == 0) throw std::invalid_argument("dressed_state: no edges");
  if (sp->spinor_dim != 2)
    throw std::invalid_argument("dressed_state: needs a spinor factor");
  if (sp->clifford_gens != 3 * ne)
    throw std::invalid_argument("dressed_state: needs 3 generators per edge");
  if (static_cast<int>(psi.psi.size()) != lat.num_vertices())
    throw std::invalid_argument("dressed_state: spinor field size");
  double psi_mass = 0.0;
  for (const auto& m : psi.psi) psi_mass += m.norm();
  if (psi_mass == 0.0)
    throw std::invalid_argument("dressed_state: spinor field vanishes");

  CliffordFactor cf = clifford_generators(3 * ne);
  Mat2 lapse = ls ? ls->matrix() : Mat2::Identity();

  std::vector<Vec> phis;
  for (int i = 0; i < ne; ++i) {
    int e = sp->edge_ids[i];
    CoherentLabel l{ph.holonomies[e], ph.fluxes[e], t};
    phis.push_back(coherent_edge_vec(l, sp->edges[i], s));
  }

  std::vector<SparseOperator> insert_ops;
  for (int i = 0; i < ne; ++i) {
    int e = sp->edge_ids[i];
    int src = lat.edges[e].src, dst = lat.edges[e].dst;
    int letter = e + 1;
    for (int a = 0; a < 3; ++a) {
      std::vector<WordItem> items = {
          WordItem::mat(sigma(a) * lapse), WordItem::lett(letter),
          WordItem::mat(psi.psi[dst]), WordItem::lett(-letter)};
      SparseOperator word = word_op(lat, sp, items, src, src);
      KronTerm g;
      g.factors.push_back({sp->clifford_factor(), cf.gens[3 * i + a]});
      insert_ops.push_back(SparseOperator::leaf(sp, {g}) * word);
    }
  }

  long cdim = sp->clifford_dim;
  int vdim = sp->vertex_dim;
  double vnorm = 1.0 / std::sqrt(static_cast<double>(vdim));
  DressedState ds;
  ds.space = sp;
  ds.weight = 1.0 / (2.0 * static_cast<double>(cdim));
  ds.insertion_amps.assign(ne, insertion_amp);
  for (long k = 0; k < cdim; ++k) {
    Vec ck = Vec::Zero(cdim);
    ck[k] = 1.0;
    for (int sref = 0; sref < 2; ++sref) {
      Vec e_s = Vec::Zero(2);
      e_s[sref] = 1.0;
      std::vector<Vec> parts = phis;
      parts.push_back(ck);
      parts.push_back(e_s);
      Vec uniform = Vec::Constant(vdim, vnorm);
      parts.push_back(uniform);
      Vec base = kron_vec(parts);

      Vec xi1 = Vec::Zero(sp->total_dim);
      for (int sl = 0; sl < vdim; ++sl) {
        int v = sp->vertex_ids.empty() ? sl : sp->vertex_ids[sl];
        if (psi.psi[v].norm() == 0.0) continue;
        std::vector<Vec> p1 = phis;
        p1.push_back(ck);
        p1.push_back(psi.psi[v] * e_s);
        Vec ev = Vec::Zero(vdim);
        ev[sl] = vnorm;
        p1.push_back(ev);
        xi1 += kron_vec(p1);
      }

      Vec xi2 = Vec::Zero(sp->total_dim);
      for (const auto& op : insert_ops) xi2 += op.apply(base);
      xi2 *= insertion_amp;

      ds.base_norm2 += ds.weight * xi1.squaredNorm();
      ds.insert_norm2 += ds.weight * xi2.squaredNorm();
      ds.norm2 += ds.weight * (xi1 + xi2).squaredNorm();
      ds.base_branches.push_back(std::move(xi1));
      ds.insert_branches.push_back(std::move(xi2));
    }
  }
  return ds;
}

cd dressed_expectation(const DressedState& ds, const SparseOperator& op) {
  if (ds.norm2 <= 0.0)
    throw std::runtime_error("dressed_expectation: zero norm");
  cd acc = 0.0;
  for (size_t b = 0; b < ds.base_branches.size(); ++b) {
    Vec xi = ds.base_branches[b] + ds.insert_branches[b];
    acc += ds.weight * xi.dot(op.apply(xi));
  }
  return acc / ds.norm2;
}

}  // namespace holo
