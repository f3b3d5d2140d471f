#pragma once

#include <array>
#include <map>
#include <vector>

#include "holotriple/lattice.hpp"
#include "holotriple/linop.hpp"
#include "holotriple/spaces.hpp"

namespace holo {

// Finite expansion of a function on the group in matrix-entry modes.
struct ModeKey {
  int two_j, two_m, two_n;
  bool operator<(const ModeKey& o) const {
    if (two_j != o.two_j) return two_j < o.two_j;
    if (two_m != o.two_m) return two_m < o.two_m;
    return two_n < o.two_n;
  }
};
using FuncPW = std::map<ModeKey, cd>;

FuncPW pw_scalar(cd c);
// Entry (r, s) of g (inverse: of g^{-1}), r, s in {0, 1}.
FuncPW pw_matrix_entry(int r, int s, bool inverse);
FuncPW pw_conj(const FuncPW& f);
// Exact pointwise product via coupling coefficients; no truncation.
FuncPW pw_product(const FuncPW& a, const FuncPW& b);
cd pw_eval(const FuncPW& f, const Mat2& g);

// Compression of multiplication by f to the truncated shell space.
SpMat mult_local(const EdgeSpace& s, const FuncPW& f);

// Derivation along direction a acting on the end index (shell-diagonal,
// anti-self-adjoint).
SpMat flux_local(const EdgeSpace& s, int a);
// Companion derivation on the start index.
SpMat flux_local_src(const EdgeSpace& s, int a);
// Projection keeping shells with two_j <= two_jmax - drop_two_j.
SpMat interior_local(const EdgeSpace& s, int drop_two_j = 1);

SparseOperator flux_op(const CompositeSpace* sp, int edge_factor, int a);
SparseOperator interior_projector(const CompositeSpace* sp,
                                  int drop_two_j = 1);

// One symbol of a path word: a signed lattice letter, or a constant 2x2
// matrix spliced into the product.
struct WordItem {
  int letter = 0;
  bool constant = false;
  Mat2 c = Mat2::Zero();
  static WordItem lett(int l) {
    WordItem w;
    w.letter = l;
    return w;
  }
  static WordItem mat(const Mat2& m) {
    WordItem w;
    w.constant = true;
    w.c = m;
    return w;
  }
};

// Kronecker terms (edge factors only) of multiplication by entry (r, s) of
// the 2x2 word symbol; letters sharing an edge are combined exactly in mode
// space before the single compression.
std::array<std::array<std::vector<KronTerm>, 2>, 2> word_entry_terms(
    const CubicLattice& lat, const CompositeSpace& sp,
    const std::vector<WordItem>& items);

// Full operator: left multiplication on the spinor factor, matrix unit on
// the vertex factor (lattice vertices given; -1 skips the vertex block).
SparseOperator word_op(const CubicLattice& lat, const CompositeSpace* sp,
                       const std::vector<WordItem>& items, int vertex_from,
                       int vertex_to);

SparseOperator holonomy_op(const CubicLattice& lat, const CompositeSpace* sp,
                           const PathWord& p);

// sigma_a/2 spliced at the word's end (forward letters) or start (reversed),
// matching the derivation commutators.
SparseOperator holonomy_insert_end(const CubicLattice& lat,
                                   const CompositeSpace* sp, const PathWord& p,
                                   const Mat2& x);
SparseOperator holonomy_insert_start(const CubicLattice& lat,
                                     const CompositeSpace* sp,
                                     const PathWord& p, const Mat2& x);

}  // namespace holo
