#include "holotriple/spaces.hpp"

#include <stdexcept>

namespace holo {

EdgeSpace make_edge_space(int two_jmax) {
  if (two_jmax < 0) throw std::invalid_argument("make_edge_space: j_max < 0");
  EdgeSpace s;
  s.two_jmax = two_jmax;
  s.shells.resize(two_jmax + 1);
  int off = 0;
  for (int tj = 0; tj <= two_jmax; ++tj) {
    s.shells[tj] = {tj, off};
    int d = tj + 1;
    for (int tm = tj; tm >= -tj; tm -= 2)
      for (int tn = tj; tn >= -tj; tn -= 2) s.labels.push_back({tj, tm, tn});
    off += d * d;
  }
  s.dim = off;
  return s;
}

int CompositeSpace::factor_of_edge(int edge_id) const {
  for (size_t k = 0; k < edge_ids.size(); ++k)
    if (edge_ids[k] == edge_id) return static_cast<int>(k);
  return -1;
}

int CompositeSpace::slot_of_vertex(int vertex) const {
  if (vertex_ids.empty()) return vertex < vertex_dim ? vertex : -1;
  for (size_t k = 0; k < vertex_ids.size(); ++k)
    if (vertex_ids[k] == vertex) return static_cast<int>(k);
  return -1;
}

CompositeSpace make_composite(std::vector<EdgeSpace> edges,
                              std::vector<int> edge_ids, int clifford_gens,
                              bool spinor, int vertex_dim) {
  if (edge_ids.size() != edges.size())
    throw std::invalid_argument("make_composite: edge id count mismatch");
  if (vertex_dim < 1)
    throw std::invalid_argument("make_composite: vertex_dim < 1");
  CompositeSpace c;
  c.edges = std::move(edges);
  c.edge_ids = std::move(edge_ids);
  c.clifford_gens = clifford_gens;
  if (clifford_gens == 0) {
    c.clifford_dim = 1;
  } else if (clifford_gens == 1) {
    c.clifford_dim = 2;
  } else {
    c.clifford_dim = 1L << (clifford_gens / 2);
  }
  c.spinor_dim = spinor ? 2 : 1;
  c.vertex_dim = vertex_dim;
  for (const auto& e : c.edges) c.factor_dims.push_back(e.dim);
  c.factor_dims.push_back(c.clifford_dim);
  c.factor_dims.push_back(c.spinor_dim);
  c.factor_dims.push_back(c.vertex_dim);
  c.strides.assign(c.factor_dims.size(), 1);
  double approx = 1.0;
  for (long d : c.factor_dims) approx *= static_cast<double>(d);
  if (approx > 4e15)
    throw std::invalid_argument("make_composite: space too large to index");
  for (int k = c.num_factors() - 2; k >= 0; --k)
    c.strides[k] = c.strides[k + 1] * c.factor_dims[k + 1];
  c.total_dim = c.strides[0] * c.factor_dims[0];
  return c;
}

Vec kron_vec(const std::vector<Vec>& parts) {
  if (parts.empty()) throw std::invalid_argument("kron_vec: no factors");
  Vec out = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) {
    const Vec& p = parts[k];
    Vec next(out.size() * p.size());
    for (long i = 0; i < out.size(); ++i)
      next.segment(i * p.size(), p.size()) = out[i] * p;
    out.swap(next);
  }
  return out;
}

CompositeSpace make_composite_uniform(int num_edges, int two_jmax,
                                      int clifford_gens, bool spinor,
                                      int vertex_dim) {
  std::vector<EdgeSpace> e;
  std::vector<int> ids;
  for (int k = 0; k < num_edges; ++k) {
    e.push_back(make_edge_space(two_jmax));
    ids.push_back(k);
  }
  return make_composite(std::move(e), std::move(ids), clifford_gens, spinor,
                        vertex_dim);
}

}  // namespace holo
