#include "holotriple/classical.hpp"

#include <stdexcept>

#include "holotriple/su2.hpp"

namespace holo {

ClassicalPhasePoint flat_phase_point(const CubicLattice& lat) {
  ClassicalPhasePoint ph;
  ph.holonomies.assign(lat.num_edges(), Mat2::Identity());
  ph.fluxes.assign(lat.num_edges(), Vec3::Zero());
  return ph;
}

Mat2 classical_holonomy(const ClassicalPhasePoint& ph, const CubicLattice& lat,
                        const PathWord& p) {
  check_path(lat, p);
  Mat2 h = Mat2::Identity();
  for (int l : p.letters) {
    const Mat2& g = ph.holonomies[letter_edge(l)];
    h = letter_forward(l) ? Mat2(h * g) : Mat2(h * g.inverse());
  }
  return h;
}

PathWord plaquette_word(const CubicLattice& lat, int v, int d1, int d2) {
  if (d1 == d2 || d1 < 0 || d1 > 2 || d2 < 0 || d2 > 2)
    throw std::invalid_argument("plaquette_word: bad direction pair");
  int e1 = lat.edge_at(v, d1);
  if (e1 < 0) throw std::invalid_argument("plaquette_word: open boundary");
  int v1 = lat.edges[e1].dst;
  int e2 = lat.edge_at(v1, d2);
  int e4 = lat.edge_at(v, d2);
  if (e2 < 0 || e4 < 0)
    throw std::invalid_argument("plaquette_word: open boundary");
  int v3 = lat.edges[e4].dst;
  int e3 = lat.edge_at(v3, d1);
  if (e3 < 0) throw std::invalid_argument("plaquette_word: open boundary");
  PathWord w;
  w.base = v;
  w.letters = {e1 + 1, e2 + 1, -(e3 + 1), -(e4 + 1)};
  check_path(lat, w);
  return w;
}

Vec3 plaquette_curvature(const ClassicalPhasePoint& ph,
                         const CubicLattice& lat, const PathWord& plaq) {
  Mat2 h = classical_holonomy(ph, lat, plaq);
  Mat2 a = 0.5 * (h - h.adjoint().eval());
  a -= 0.5 * a.trace() * Mat2::Identity();
  double eps2 = lat.spacing() * lat.spacing();
  Vec3 f;
  for (int c = 0; c < 3; ++c) f(c) = ((sigma(c) * a).trace() / im).real() / eps2;
  return f;
}

}  // namespace holo
