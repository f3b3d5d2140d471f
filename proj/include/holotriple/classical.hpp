#pragma once

#include "holotriple/lattice.hpp"

namespace holo {

// Point data for the commutative limit: one group element and one flux
// triple per edge.  flux_scale multiplies every flux component.
struct ClassicalPhasePoint {
  std::vector<Mat2> holonomies;
  std::vector<Vec3> fluxes;
  double flux_scale = 1.0;

  Vec3 scaled_flux(int edge) const { return flux_scale * fluxes[edge]; }
};

ClassicalPhasePoint flat_phase_point(const CubicLattice& lat);

// Ordered product of the letters' group elements, inverses for reversed
// letters.
Mat2 classical_holonomy(const ClassicalPhasePoint& ph, const CubicLattice& lat,
                        const PathWord& p);

// The four-letter loop at v spanned by directions d1, d2.
PathWord plaquette_word(const CubicLattice& lat, int v, int d1, int d2);

// Components F_a of the loop's curvature: with A the traceless part of
// (h - h^dagger)/2, returns tr(sigma_a A) / (i spacing^2), so that
// h = exp(i eps^2 F.sigma/2) gives F to leading order.
Vec3 plaquette_curvature(const ClassicalPhasePoint& ph,
                         const CubicLattice& lat, const PathWord& plaq);

}  // namespace holo
