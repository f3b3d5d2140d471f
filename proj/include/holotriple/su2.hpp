#pragma once

#include "holotriple/types.hpp"

namespace holo {

// Spins are passed around as 2j so half-integers stay exact.
inline int dim_j(int two_j) { return two_j + 1; }
inline double jj1(int two_j) {
  double j = 0.5 * two_j;
  return j * (j + 1.0);
}

// Pauli matrix, a in {0,1,2}.
Mat2 sigma(int a);

// Closed-form exp of an arbitrary complex 2x2 matrix.
Mat2 exp_mat2(const Mat2& m);

// exp(i w.sigma/2): unitary, rotation by angle |w| about axis w.
Mat2 exp_su2(const Vec3& w);

// exp(b.sigma/2): positive hermitian polar factor.
Mat2 boost_su2(const Vec3& b);

// Angular momentum matrices on the spin-j space, basis ordered m = j..-j.
Mat jz(int two_j);
Mat jplus(int two_j);
Mat jminus(int two_j);
Mat jmat(int two_j, int a);  // hermitian J_a
Mat tau(int two_j, int a);   // i J_a, anti-hermitian

// Irreducible representation matrix of g acting on degree-2j polynomials
// via f(z) -> f(z g).  Valid for any invertible g, multiplicative in g,
// unitary when g is.  wigner_d(1, g) == g.
Mat wigner_d(int two_j, const Mat2& g);

// tr wigner_d(two_j, g).
cd character(int two_j, const Mat2& g);

}  // namespace holo
