#pragma once

#include <vector>

#include "holotriple/linop.hpp"

namespace holo {

// Randomized pairing test on large spaces, exact sparse comparison on small
// ones.
bool is_self_adjoint(const SparseOperator& a, double tol = 1e-10,
                     unsigned seed = 99);

// Dense spectrum, ascending; requires total dim <= 4096 and self-adjointness.
std::vector<double> spectrum_full(const SparseOperator& a,
                                  double sa_tol = 1e-10);

struct ExtremalEigs {
  std::vector<double> low;   // ascending
  std::vector<double> high;  // ascending
  int iterations = 0;
  double residual = 0.0;
};

// Krylov scheme with full reorthogonalization and a seeded start vector.
ExtremalEigs lanczos_extremal(const SparseOperator& a, int k_low, int k_high,
                              int maxit = 400, double tol = 1e-11,
                              unsigned seed = 1234);

// k extremal eigenvalues (k = 0: full dense), ascending; enforces the
// self-adjointness contract.
std::vector<double> spectrum(const SparseOperator& a, int k = 0);

// Largest singular value.  For self-adjoint inputs the largest |eigenvalue|;
// otherwise via the normal operator.
double op_norm(const SparseOperator& a, bool self_adjoint = false,
               int maxit = 400, unsigned seed = 1234);

}  // namespace holo
