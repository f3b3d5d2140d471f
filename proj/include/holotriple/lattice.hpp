#pragma once

#include <array>
#include <vector>

#include "holotriple/types.hpp"

namespace holo {

struct Edge {
  int src = 0;
  int dst = 0;
  int dir = 0;  // 0,1,2 for the three axes
};

// Cubic graph with oriented, axis-tagged edges.  Periodic lattices identify
// coordinates mod extent; open ones keep a boundary.  Immutable once built.
struct CubicLattice {
  int level = 0;
  int extent = 1;
  bool periodic = true;
  std::vector<std::array<int, 3>> vertices;
  std::vector<Edge> edges;
  std::vector<int> edge_from;  // 3*vertex+dir -> edge id, -1 at open boundary

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int vertex_index(std::array<int, 3> c) const;
  // Edge leaving v along dir, or -1 on an open boundary.
  int edge_at(int v, int dir) const;
  // Edge arriving at v along dir, or -1.
  int edge_into(int v, int dir) const;
  double spacing() const;  // 2^{-level}
};

// Letters are signed 1-based edge ids: +(e+1) forward, -(e+1) reversed.
struct PathWord {
  std::vector<int> letters;
  int base = 0;  // start vertex, meaningful also for the empty word
};

inline int letter_edge(int letter) { return std::abs(letter) - 1; }
inline bool letter_forward(int letter) { return letter > 0; }

CubicLattice build_lattice(int extent, bool periodic);

struct Subdivision {
  CubicLattice child;
  std::vector<int> vertex_image;       // parent vertex -> child vertex
  std::vector<PathWord> edge_image;    // parent edge -> 2-letter child path
};
Subdivision subdivide(const CubicLattice& lat);

int letter_start(const CubicLattice& lat, int letter);
int letter_end(const CubicLattice& lat, int letter);
int word_start(const CubicLattice& lat, const PathWord& w);
int word_end(const CubicLattice& lat, const PathWord& w);

PathWord single_letter(const CubicLattice& lat, int edge, bool forward);

// Checks adjacency (and base for nonempty words); throws on malformed input.
void check_path(const CubicLattice& lat, const PathWord& w);

// Stack-pass cancellation of adjacent inverse pairs; idempotent.
PathWord reduce(const CubicLattice& lat, const PathWord& w);

PathWord inverse(const CubicLattice& lat, const PathWord& w);

// Reduced concatenation; end(p) must equal start(q).
PathWord compose(const CubicLattice& lat, const PathWord& p, const PathWord& q);

// Graph symmetry: a vertex bijection together with an image path per edge.
struct LatticeDiffeo {
  std::vector<int> vertex_map;
  std::vector<PathWord> edge_paths;
  bool volume_preserving = true;
};

LatticeDiffeo identity_diffeo(const CubicLattice& lat);
void check_diffeo(const CubicLattice& lat, const LatticeDiffeo& d);
PathWord apply_diffeo(const CubicLattice& lat, const LatticeDiffeo& d,
                      const PathWord& p);
// d2 after d1.
LatticeDiffeo compose(const CubicLattice& lat, const LatticeDiffeo& d2,
                      const LatticeDiffeo& d1);

// v -> R v + shift with R a signed permutation matrix; periodic lattices only.
LatticeDiffeo grid_isometry(const CubicLattice& lat, const Eigen::Matrix3i& rot,
                            const std::array<int, 3>& shift);
LatticeDiffeo translation_diffeo(const CubicLattice& lat,
                                 const std::array<int, 3>& shift);
// 120-degree rotation about the body diagonal: (x,y,z) -> (z,x,y), which
// maps every edge to a single forward edge.
LatticeDiffeo body_diagonal_rotation(const CubicLattice& lat);
// 90-degree rotation about the z axis; reverses some edges.
LatticeDiffeo quarter_turn_z(const CubicLattice& lat);

// Weighted family of paths; (end, start) block entry carries weight times
// the path holonomy.
struct WeightedFlow {
  std::vector<std::pair<PathWord, cd>> entries;
};

}  // namespace holo
