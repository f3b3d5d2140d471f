#pragma once

#include <vector>

#include "holotriple/types.hpp"

namespace holo {

// k anticommuting self-adjoint involutions.  Even k: Jordan-Wigner chain on
// k/2 qubits, dimension 2^{k/2}.  Odd k >= 3: the even chain on (k-1)/2
// qubits plus the chirality element sigma3 x ... x sigma3 as the last
// generator, dimension 2^{(k-1)/2}.  k = 1: {sigma_3} in dimension 2.
struct CliffordFactor {
  int num_gens = 0;
  long dim = 1;
  std::vector<SpMat> gens;
};

CliffordFactor clifford_generators(int k);

}  // namespace holo
