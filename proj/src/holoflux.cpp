#include "holotriple/holoflux.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <stdexcept>

#include "holotriple/clebsch.hpp"
#include "holotriple/su2.hpp"

namespace holo {

namespace {

using Trip = Eigen::Triplet<cd>;

void add_mode(FuncPW& f, ModeKey k, cd c) {
  if (c == cd(0.0)) return;
  auto it = f.find(k);
  if (it == f.end())
    f.emplace(k, c);
  else {
    it->second += c;
    if (std::abs(it->second) < 1e-15) f.erase(it);
  }
}

SpMat unit_matrix(int dim, int r, int c) {
  SpMat m(dim, dim);
  m.insert(r, c) = cd(1.0);
  m.makeCompressed();
  return m;
}

}  // namespace

FuncPW pw_scalar(cd c) {
  FuncPW f;
  if (c != cd(0.0)) f[{0, 0, 0}] = c;
  return f;
}

FuncPW pw_matrix_entry(int r, int s, bool inverse) {
  if (r < 0 || r > 1 || s < 0 || s > 1)
    throw std::invalid_argument("pw_matrix_entry: index out of range");
  FuncPW f;
  if (!inverse) {
    f[{1, 1 - 2 * r, 1 - 2 * s}] = cd(1.0);
  } else {
    // (g^{-1})_{rs} = conj(g_{sr}) pointwise on the unitary group.
    double ph = ((r - s) % 2 == 0) ? 1.0 : -1.0;
    f[{1, 2 * s - 1, 2 * r - 1}] = cd(ph);
  }
  return f;
}

FuncPW pw_conj(const FuncPW& f) {
  FuncPW out;
  for (const auto& [k, c] : f) {
    int half = (k.two_m - k.two_n) / 2;
    double ph = (half % 2 == 0) ? 1.0 : -1.0;
    add_mode(out, {k.two_j, -k.two_m, -k.two_n}, ph * std::conj(c));
  }
  return out;
}

FuncPW pw_product(const FuncPW& a, const FuncPW& b) {
  FuncPW out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      int tM = ka.two_m + kb.two_m;
      int tN = ka.two_n + kb.two_n;
      int lo = std::abs(ka.two_j - kb.two_j);
      int hi = ka.two_j + kb.two_j;
      for (int tj = lo; tj <= hi; tj += 2) {
        if (std::abs(tM) > tj || std::abs(tN) > tj) continue;
        double w = cg_coeff(ka.two_j, ka.two_m, kb.two_j, kb.two_m, tj, tM) *
                   cg_coeff(ka.two_j, ka.two_n, kb.two_j, kb.two_n, tj, tN);
        if (w != 0.0) add_mode(out, {tj, tM, tN}, ca * cb * w);
      }
    }
  }
  return out;
}

cd pw_eval(const FuncPW& f, const Mat2& g) {
  cd v = 0.0;
  for (const auto& [k, c] : f) {
    Mat d = wigner_d(k.two_j, g);
    v += c * d((k.two_j - k.two_m) / 2, (k.two_j - k.two_n) / 2);
  }
  return v;
}

SpMat mult_local(const EdgeSpace& s, const FuncPW& f) {
  std::vector<Trip> trips;
  for (const auto& [k, c] : f) {
    for (const auto& lab : s.labels) {
      int tmp = lab.two_m + k.two_m;
      int tnp = lab.two_n + k.two_n;
      int lo = std::abs(k.two_j - lab.two_j);
      int hi = std::min(k.two_j + lab.two_j, s.two_jmax);
      for (int tjp = lo; tjp <= hi; tjp += 2) {
        if (std::abs(tmp) > tjp || std::abs(tnp) > tjp) continue;
        double w =
            std::sqrt((lab.two_j + 1.0) / (tjp + 1.0)) *
            cg_coeff(k.two_j, k.two_m, lab.two_j, lab.two_m, tjp, tmp) *
            cg_coeff(k.two_j, k.two_n, lab.two_j, lab.two_n, tjp, tnp);
        if (w == 0.0) continue;
        trips.emplace_back(s.index(tjp, tmp, tnp),
                           s.index(lab.two_j, lab.two_m, lab.two_n), c * w);
      }
    }
  }
  SpMat m(s.dim, s.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.prune([](int, int, const cd& v) { return std::abs(v) > 1e-15; });
  m.makeCompressed();
  return m;
}

SpMat flux_local(const EdgeSpace& s, int a) {
  std::vector<Trip> trips;
  for (const auto& sh : s.shells) {
    int d = sh.two_j + 1;
    Mat t = tau(sh.two_j, a);
    for (int mi = 0; mi < d; ++mi)
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
          if (t(p, q) != cd(0.0))
            trips.emplace_back(sh.offset + mi * d + p, sh.offset + mi * d + q,
                               t(p, q));
  }
  SpMat m(s.dim, s.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

SpMat flux_local_src(const EdgeSpace& s, int a) {
  std::vector<Trip> trips;
  for (const auto& sh : s.shells) {
    int d = sh.two_j + 1;
    Mat t = tau(sh.two_j, a);
    for (int ni = 0; ni < d; ++ni)
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
          if (t(p, q) != cd(0.0))
            trips.emplace_back(sh.offset + q * d + ni, sh.offset + p * d + ni,
                               t(p, q));
  }
  SpMat m(s.dim, s.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

SpMat interior_local(const EdgeSpace& s, int drop_two_j) {
  std::vector<Trip> trips;
  for (const auto& sh : s.shells) {
    if (sh.two_j > s.two_jmax - drop_two_j) continue;
    int dd = (sh.two_j + 1) * (sh.two_j + 1);
    for (int k = 0; k < dd; ++k)
      trips.emplace_back(sh.offset + k, sh.offset + k, cd(1.0));
  }
  SpMat m(s.dim, s.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

SparseOperator flux_op(const CompositeSpace* sp, int edge_factor, int a) {
  if (edge_factor < 0 || edge_factor >= static_cast<int>(sp->edges.size()))
    throw std::invalid_argument("flux_op: bad edge factor");
  KronTerm t;
  t.factors.push_back({edge_factor, flux_local(sp->edges[edge_factor], a)});
  return SparseOperator::leaf(sp, {t});
}

SparseOperator interior_projector(const CompositeSpace* sp, int drop_two_j) {
  KronTerm t;
  for (int k = 0; k < static_cast<int>(sp->edges.size()); ++k)
    t.factors.push_back({k, interior_local(sp->edges[k], drop_two_j)});
  return SparseOperator::leaf(sp, {t});
}

std::array<std::array<std::vector<KronTerm>, 2>, 2> word_entry_terms(
    const CubicLattice& lat, const CompositeSpace& sp,
    const std::vector<WordItem>& items) {
  struct Partial {
    cd coeff;
    std::map<int, FuncPW> per_factor;
  };
  std::array<std::array<std::vector<KronTerm>, 2>, 2> out;
  for (int r0 = 0; r0 < 2; ++r0) {
    std::array<std::vector<Partial>, 2> cur;
    cur[r0].push_back({cd(1.0), {}});
    for (const auto& it : items) {
      std::array<std::vector<Partial>, 2> nxt;
      int factor = -1;
      if (!it.constant) {
        int e = letter_edge(it.letter);
        if (e < 0 || e >= lat.num_edges())
          throw std::invalid_argument("word_entry_terms: letter out of range");
        factor = sp.factor_of_edge(e);
        if (factor < 0)
          throw std::invalid_argument(
              "word_entry_terms: edge has no factor in this space");
      }
      for (int r = 0; r < 2; ++r) {
        for (const auto& p : cur[r]) {
          for (int rn = 0; rn < 2; ++rn) {
            if (it.constant) {
              cd c = it.c(r, rn);
              if (c == cd(0.0)) continue;
              Partial q = p;
              q.coeff *= c;
              nxt[rn].push_back(std::move(q));
            } else {
              Partial q = p;
              FuncPW ent = pw_matrix_entry(r, rn, !letter_forward(it.letter));
              auto f = q.per_factor.find(factor);
              if (f == q.per_factor.end())
                q.per_factor.emplace(factor, std::move(ent));
              else
                f->second = pw_product(f->second, ent);
              nxt[rn].push_back(std::move(q));
            }
          }
        }
      }
      cur = std::move(nxt);
    }
    for (int rk = 0; rk < 2; ++rk) {
      for (auto& p : cur[rk]) {
        KronTerm t;
        t.coeff = p.coeff;
        bool dead = false;
        for (auto& [factor, f] : p.per_factor) {
          if (f.empty()) {
            dead = true;
            break;
          }
          if (f.size() == 1 && f.begin()->first.two_j == 0) {
            t.coeff *= f.begin()->second;
            continue;
          }
          t.factors.push_back({factor, mult_local(sp.edges[factor], f)});
        }
        if (dead || t.coeff == cd(0.0)) continue;
        out[r0][rk].push_back(std::move(t));
      }
    }
  }
  return out;
}

SparseOperator word_op(const CubicLattice& lat, const CompositeSpace* sp,
                       const std::vector<WordItem>& items, int vertex_from,
                       int vertex_to) {
  if (sp->spinor_dim != 2)
    throw std::invalid_argument("word_op: needs a spinor factor");
  auto entries = word_entry_terms(lat, *sp, items);
  bool with_vertex = sp->vertex_dim > 1 && vertex_from >= 0 && vertex_to >= 0;
  int slot_from = 0, slot_to = 0;
  if (with_vertex) {
    slot_from = sp->slot_of_vertex(vertex_from);
    slot_to = sp->slot_of_vertex(vertex_to);
    if (slot_from < 0 || slot_to < 0)
      throw std::invalid_argument("word_op: endpoint has no vertex slot");
  }
  std::vector<KronTerm> all;
  for (int r0 = 0; r0 < 2; ++r0)
    for (int rk = 0; rk < 2; ++rk)
      for (const auto& t : entries[r0][rk]) {
        KronTerm full = t;
        full.factors.push_back(
            {sp->spinor_factor(), unit_matrix(2, r0, rk)});
        if (with_vertex)
          full.factors.push_back({sp->vertex_factor(),
                                  unit_matrix(sp->vertex_dim, slot_from,
                                              slot_to)});
        all.push_back(std::move(full));
      }
  if (all.empty()) return SparseOperator::zero(sp);
  return SparseOperator::leaf(sp, std::move(all));
}

SparseOperator holonomy_op(const CubicLattice& lat, const CompositeSpace* sp,
                           const PathWord& p) {
  check_path(lat, p);
  std::vector<WordItem> items;
  for (int l : p.letters) items.push_back(WordItem::lett(l));
  int vf = -1, vt = -1;
  if (sp->vertex_dim > 1) {
    vf = word_start(lat, p);
    vt = word_end(lat, p);
  }
  return word_op(lat, sp, items, vf, vt);
}

SparseOperator holonomy_insert_end(const CubicLattice& lat,
                                   const CompositeSpace* sp, const PathWord& p,
                                   const Mat2& x) {
  check_path(lat, p);
  std::vector<WordItem> items;
  for (int l : p.letters) items.push_back(WordItem::lett(l));
  items.push_back(WordItem::mat(x));
  int vf = -1, vt = -1;
  if (sp->vertex_dim > 1) {
    vf = word_start(lat, p);
    vt = word_end(lat, p);
  }
  return word_op(lat, sp, items, vf, vt);
}

SparseOperator holonomy_insert_start(const CubicLattice& lat,
                                     const CompositeSpace* sp,
                                     const PathWord& p, const Mat2& x) {
  check_path(lat, p);
  std::vector<WordItem> items;
  items.push_back(WordItem::mat(x));
  for (int l : p.letters) items.push_back(WordItem::lett(l));
  int vf = -1, vt = -1;
  if (sp->vertex_dim > 1) {
    vf = word_start(lat, p);
    vt = word_end(lat, p);
  }
  return word_op(lat, sp, items, vf, vt);
}

}  // namespace holo
