#pragma once

#include "holotriple/clifford.hpp"
#include "holotriple/holoflux.hpp"

namespace holo {

// Self-adjoint flux companion; the derivation scaled by -i.
inline SpMat flux_sa_local(const EdgeSpace& s, int a) {
  return cd(0.0, -1.0) * flux_local(s, a);
}

// Sum over edge factors i and directions a of
// alphas[i] * gamma_{3i+a} (x) (-i) flux_local(i, a).
// Needs clifford_gens == 3 * (number of edge factors).
SparseOperator dirac_op(const CompositeSpace* sp, const CliffordFactor& cf,
                        const std::vector<double>& alphas);

// Closed form of the commutator with the holonomy of one letter: the
// holonomy with sigma_a/2 spliced at the moving endpoint, weighted by the
// letter's Clifford generator.  Exact on the truncated space.
SparseOperator dirac_letter_commutator(const CubicLattice& lat,
                                       const CompositeSpace* sp,
                                       const CliffordFactor& cf,
                                       const std::vector<double>& alphas,
                                       int letter);

// d plus the weighted holonomy commutators of the flow.
SparseOperator fluctuated_dirac(const CubicLattice& lat,
                                const CompositeSpace* sp,
                                const SparseOperator& d,
                                const WeightedFlow& flow);

// Curvature-pairing constraint built on one plaquette word: for each cyclic
// pair of consecutive letters, the antisymmetrized product of flux-holonomy
// anticommutators dressed with spinor matrices, closed by the remaining two
// holonomies.  t scales the flux insertions.
SparseOperator hamiltonian_constraint_op(const CubicLattice& lat,
                                         const CompositeSpace* sp,
                                         const std::array<int, 4>& letters,
                                         double t, double prefactor);

// Edge permutation of a symmetry whose edge images are single letters;
// returns empty and sets *all_forward = false if any image is longer or
// reversed.
std::vector<int> diffeo_edge_permutation(const CubicLattice& lat,
                                         const LatticeDiffeo& d,
                                         bool* all_forward);

// ||[D, U]|| for an edge-relabeling symmetry, via the closed form
// (j_max + 1) * ||alpha - alpha o perm^{-1}||_2.  Throws unless every edge
// image is a single forward letter.
double structural_commutator_norm(const CubicLattice& lat, int two_jmax,
                                  const std::vector<double>& alphas,
                                  const LatticeDiffeo& d);

// Unitary U with U gens[p] U^dagger = targets[p], from the stacked
// intertwiner equations; throws if no unitary solution exists.
Mat clifford_intertwiner(const CliffordFactor& cf,
                         const std::vector<Mat>& targets);

// Local unitary implementing group inversion on one truncated edge space.
SpMat inversion_local(const EdgeSpace& s);

struct DiffeoNormReport {
  double norm = 0.0;
  bool flips = false;        // some edge image is reversed
  bool clifford_ok = false;  // generator intertwiner found
};

// Builds the symmetry unitary explicitly (edge-factor permutation, inversion
// blocks on reversed images, Clifford intertwiner when available) and
// measures ||[D, U]||.  Small spaces only.
DiffeoNormReport dense_commutator_norm(const CubicLattice& lat,
                                       const CompositeSpace* sp,
                                       const CliffordFactor& cf,
                                       const std::vector<double>& alphas,
                                       const LatticeDiffeo& d);

}  // namespace holo
