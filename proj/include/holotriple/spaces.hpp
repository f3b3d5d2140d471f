#pragma once

#include <vector>

#include "holotriple/types.hpp"

namespace holo {

// Truncated function space on one group copy: shells j = 0, 1/2, ..., j_max,
// each shell spanned by the sqrt(2j+1)-normalized matrix entries, basis index
// (j, m, n) with n fastest and both m, n descending.
struct EdgeSpace {
  int two_jmax = 0;
  int dim = 0;
  struct Shell {
    int two_j;
    int offset;
  };
  struct Label {
    int two_j, two_m, two_n;
  };
  std::vector<Shell> shells;
  std::vector<Label> labels;

  int shell_offset(int two_j) const { return shells[two_j].offset; }
  int index(int two_j, int two_m, int two_n) const {
    int d = two_j + 1;
    return shells[two_j].offset + ((two_j - two_m) / 2) * d +
           (two_j - two_n) / 2;
  }
};

EdgeSpace make_edge_space(int two_jmax);

// Tensor product with fixed factor order: edge factors first, then the
// Clifford factor, the 2-spinor factor, and the vertex factor.  Absent
// factors have dimension 1.
struct CompositeSpace {
  std::vector<EdgeSpace> edges;
  std::vector<int> edge_ids;  // lattice edge id per factor, -1 if detached
  int clifford_gens = 0;
  long clifford_dim = 1;
  int spinor_dim = 1;
  int vertex_dim = 1;
  std::vector<int> vertex_ids;  // lattice vertex per slot; empty = identity map
  std::vector<long> factor_dims;
  std::vector<long> strides;
  long total_dim = 1;

  int num_factors() const { return static_cast<int>(factor_dims.size()); }
  int clifford_factor() const { return static_cast<int>(edges.size()); }
  int spinor_factor() const { return clifford_factor() + 1; }
  int vertex_factor() const { return clifford_factor() + 2; }
  // Position of a lattice edge among the factors, -1 if absent.
  int factor_of_edge(int edge_id) const;
  // Vertex-factor slot holding a lattice vertex, -1 if absent.
  int slot_of_vertex(int vertex) const;
};

CompositeSpace make_composite(std::vector<EdgeSpace> edges,
                              std::vector<int> edge_ids, int clifford_gens,
                              bool spinor, int vertex_dim);

// Convenience: all edges share one truncation.
CompositeSpace make_composite_uniform(int num_edges, int two_jmax,
                                      int clifford_gens, bool spinor,
                                      int vertex_dim);

struct StateVector {
  const CompositeSpace* space = nullptr;
  Vec coeffs;
};

// Kronecker product of per-factor vectors, first factor slowest.
Vec kron_vec(const std::vector<Vec>& parts);

}  // namespace holo
