#include "holotriple/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holo {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int CubicLattice::vertex_index(std::array<int, 3> c) const {
  int side = periodic ? extent : extent + 1;
  for (int k = 0; k < 3; ++k) {
    if (periodic) {
      c[k] = mod(c[k], extent);
    } else if (c[k] < 0 || c[k] > extent) {
      return -1;
    }
  }
  return c[0] + side * (c[1] + side * c[2]);
}

int CubicLattice::edge_at(int v, int dir) const {
  return edge_from[3 * v + dir];
}

int CubicLattice::edge_into(int v, int dir) const {
  auto c = vertices[v];
  c[dir] -= 1;
  int u = vertex_index(c);
  if (u < 0) return -1;
  return edge_at(u, dir);
}

double CubicLattice::spacing() const { return std::pow(0.5, level); }

CubicLattice build_lattice(int extent, bool periodic) {
  if (extent < 1) throw std::invalid_argument("build_lattice: extent < 1");
  CubicLattice lat;
  lat.extent = extent;
  lat.periodic = periodic;
  int side = periodic ? extent : extent + 1;
  lat.vertices.resize(side * side * side);
  for (int z = 0; z < side; ++z)
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x)
        lat.vertices[x + side * (y + side * z)] = {x, y, z};
  lat.edge_from.assign(3 * lat.num_vertices(), -1);
  for (int v = 0; v < lat.num_vertices(); ++v) {
    auto c = lat.vertices[v];
    for (int d = 0; d < 3; ++d) {
      if (!periodic && c[d] >= extent) continue;
      auto t = c;
      t[d] += 1;
      lat.edge_from[3 * v + d] = lat.num_edges();
      lat.edges.push_back({v, lat.vertex_index(t), d});
    }
  }
  return lat;
}

Subdivision subdivide(const CubicLattice& lat) {
  Subdivision s;
  s.child = build_lattice(2 * lat.extent, lat.periodic);
  s.child.level = lat.level + 1;
  s.vertex_image.resize(lat.num_vertices());
  for (int v = 0; v < lat.num_vertices(); ++v) {
    auto c = lat.vertices[v];
    s.vertex_image[v] = s.child.vertex_index({2 * c[0], 2 * c[1], 2 * c[2]});
  }
  s.edge_image.resize(lat.num_edges());
  for (int e = 0; e < lat.num_edges(); ++e) {
    const Edge& ed = lat.edges[e];
    int cv = s.vertex_image[ed.src];
    int e1 = s.child.edge_at(cv, ed.dir);
    auto mid = s.child.vertices[s.child.edges[e1].dst];
    int e2 = s.child.edge_at(s.child.vertex_index(mid), ed.dir);
    PathWord w;
    w.base = cv;
    w.letters = {e1 + 1, e2 + 1};
    s.edge_image[e] = w;
  }
  return s;
}

int letter_start(const CubicLattice& lat, int letter) {
  const Edge& e = lat.edges[letter_edge(letter)];
  return letter_forward(letter) ? e.src : e.dst;
}

int letter_end(const CubicLattice& lat, int letter) {
  const Edge& e = lat.edges[letter_edge(letter)];
  return letter_forward(letter) ? e.dst : e.src;
}

int word_start(const CubicLattice& lat, const PathWord& w) {
  return w.letters.empty() ? w.base : letter_start(lat, w.letters.front());
}

int word_end(const CubicLattice& lat, const PathWord& w) {
  return w.letters.empty() ? w.base : letter_end(lat, w.letters.back());
}

PathWord single_letter(const CubicLattice& lat, int edge, bool forward) {
  PathWord w;
  w.letters = {forward ? edge + 1 : -(edge + 1)};
  w.base = letter_start(lat, w.letters[0]);
  return w;
}

void check_path(const CubicLattice& lat, const PathWord& w) {
  if (w.base < 0 || w.base >= lat.num_vertices())
    throw std::invalid_argument("path: base out of range");
  int at = w.base;
  for (int l : w.letters) {
    int e = letter_edge(l);
    if (l == 0 || e >= lat.num_edges())
      throw std::invalid_argument("path: bad letter");
    if (letter_start(lat, l) != at)
      throw std::invalid_argument("path: adjacency violated");
    at = letter_end(lat, l);
  }
}

PathWord reduce(const CubicLattice& lat, const PathWord& w) {
  check_path(lat, w);
  PathWord out;
  out.base = word_start(lat, w);
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  if (!out.letters.empty()) out.base = letter_start(lat, out.letters.front());
  return out;
}

PathWord inverse(const CubicLattice& lat, const PathWord& w) {
  PathWord out;
  out.base = word_end(lat, w);
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

PathWord compose(const CubicLattice& lat, const PathWord& p,
                 const PathWord& q) {
  if (word_end(lat, p) != word_start(lat, q))
    throw std::invalid_argument("compose: endpoint mismatch");
  PathWord cat;
  cat.base = word_start(lat, p);
  cat.letters = p.letters;
  cat.letters.insert(cat.letters.end(), q.letters.begin(), q.letters.end());
  return reduce(lat, cat);
}

LatticeDiffeo identity_diffeo(const CubicLattice& lat) {
  LatticeDiffeo d;
  d.vertex_map.resize(lat.num_vertices());
  for (int v = 0; v < lat.num_vertices(); ++v) d.vertex_map[v] = v;
  d.edge_paths.resize(lat.num_edges());
  for (int e = 0; e < lat.num_edges(); ++e)
    d.edge_paths[e] = single_letter(lat, e, true);
  return d;
}

void check_diffeo(const CubicLattice& lat, const LatticeDiffeo& d) {
  std::vector<int> seen(lat.num_vertices(), 0);
  for (int v : d.vertex_map) {
    if (v < 0 || v >= lat.num_vertices() || seen[v]++)
      throw std::invalid_argument("diffeo: vertex map not a bijection");
  }
  for (int e = 0; e < lat.num_edges(); ++e) {
    check_path(lat, d.edge_paths[e]);
    if (word_start(lat, d.edge_paths[e]) != d.vertex_map[lat.edges[e].src] ||
        word_end(lat, d.edge_paths[e]) != d.vertex_map[lat.edges[e].dst])
      throw std::invalid_argument("diffeo: edge path endpoints inconsistent");
  }
}

PathWord apply_diffeo(const CubicLattice& lat, const LatticeDiffeo& d,
                      const PathWord& p) {
  PathWord out;
  out.base = d.vertex_map[word_start(lat, p)];
  for (int l : p.letters) {
    PathWord seg = d.edge_paths[letter_edge(l)];
    if (!letter_forward(l)) seg = inverse(lat, seg);
    out.letters.insert(out.letters.end(), seg.letters.begin(),
                       seg.letters.end());
  }
  if (!out.letters.empty()) out.base = letter_start(lat, out.letters.front());
  return reduce(lat, out);
}

LatticeDiffeo compose(const CubicLattice& lat, const LatticeDiffeo& d2,
                      const LatticeDiffeo& d1) {
  LatticeDiffeo d;
  d.vertex_map.resize(lat.num_vertices());
  for (int v = 0; v < lat.num_vertices(); ++v)
    d.vertex_map[v] = d2.vertex_map[d1.vertex_map[v]];
  d.edge_paths.resize(lat.num_edges());
  for (int e = 0; e < lat.num_edges(); ++e)
    d.edge_paths[e] = apply_diffeo(lat, d2, d1.edge_paths[e]);
  d.volume_preserving = d1.volume_preserving && d2.volume_preserving;
  return d;
}

LatticeDiffeo grid_isometry(const CubicLattice& lat, const Eigen::Matrix3i& rot,
                            const std::array<int, 3>& shift) {
  if (!lat.periodic)
    throw std::invalid_argument("grid_isometry: periodic lattices only");
  if (std::abs(rot.determinant()) != 1)
    throw std::invalid_argument("grid_isometry: not a signed permutation");
  auto map_coord = [&](std::array<int, 3> c) {
    std::array<int, 3> out;
    for (int r = 0; r < 3; ++r) {
      int acc = shift[r];
      for (int k = 0; k < 3; ++k) acc += rot(r, k) * c[k];
      out[r] = mod(acc, lat.extent);
    }
    return out;
  };
  LatticeDiffeo d;
  d.vertex_map.resize(lat.num_vertices());
  for (int v = 0; v < lat.num_vertices(); ++v)
    d.vertex_map[v] = lat.vertex_index(map_coord(lat.vertices[v]));
  d.edge_paths.resize(lat.num_edges());
  for (int e = 0; e < lat.num_edges(); ++e) {
    const Edge& ed = lat.edges[e];
    int dout = -1, sgn = 0;
    for (int r = 0; r < 3; ++r)
      if (rot(r, ed.dir) != 0) {
        dout = r;
        sgn = rot(r, ed.dir);
      }
    int sv = d.vertex_map[ed.src];
    PathWord w;
    if (sgn > 0) {
      w = single_letter(lat, lat.edge_at(sv, dout), true);
    } else {
      w = single_letter(lat, lat.edge_into(sv, dout), false);
    }
    d.edge_paths[e] = w;
  }
  check_diffeo(lat, d);
  return d;
}

LatticeDiffeo translation_diffeo(const CubicLattice& lat,
                                 const std::array<int, 3>& shift) {
  return grid_isometry(lat, Eigen::Matrix3i::Identity(), shift);
}

LatticeDiffeo body_diagonal_rotation(const CubicLattice& lat) {
  Eigen::Matrix3i r = Eigen::Matrix3i::Zero();
  // (x,y,z) -> (z,x,y): e_x -> e_y, e_y -> e_z, e_z -> e_x.
  r(0, 2) = 1;
  r(1, 0) = 1;
  r(2, 1) = 1;
  return grid_isometry(lat, r, {0, 0, 0});
}

LatticeDiffeo quarter_turn_z(const CubicLattice& lat) {
  Eigen::Matrix3i r = Eigen::Matrix3i::Zero();
  // (x,y,z) -> (-y,x,z): e_x -> e_y, e_y -> -e_x.
  r(0, 1) = -1;
  r(1, 0) = 1;
  r(2, 2) = 1;
  return grid_isometry(lat, r, {0, 0, 0});
}

}  // namespace holo
