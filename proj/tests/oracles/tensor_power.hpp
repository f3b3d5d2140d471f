#pragma once

#include <vector>

#include "holotriple/types.hpp"

// Spin-j matrix as the restriction of the 2j-fold tensor power of g to the
// symmetric subspace.  Exponential-size construction, reference route only.
namespace oracle {

inline holo::Mat sym_tensor_power(const holo::Mat2& g, int two_j) {
  using holo::Mat;
  const int n = two_j;
  const long dim = 1L << n;
  Mat big = Mat::Ones(1, 1);
  for (int k = 0; k < n; ++k) {
    Mat next(big.rows() * 2, big.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next.block(i * big.rows(), j * big.cols(), big.rows(), big.cols()) =
            g(i, j) * big;
    big = next;
  }
  // Isometry onto the symmetric subspace; column r collects bit patterns
  // with r ones, normalized.  Bit value 1 in slot k selects the second
  // basis vector of factor k.
  Mat s = Mat::Zero(dim, n + 1);
  std::vector<double> count(n + 1, 0.0);
  for (long p = 0; p < dim; ++p) count[__builtin_popcountl(p)] += 1.0;
  for (long p = 0; p < dim; ++p) {
    int r = __builtin_popcountl(p);
    s(p, r) = 1.0 / std::sqrt(count[r]);
  }
  return s.adjoint() * big * s;
}

}  // namespace oracle
