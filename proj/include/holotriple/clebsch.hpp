#pragma once

#include <vector>

#include "holotriple/types.hpp"

namespace holo {

// Change of basis between a two-factor product space and its decomposition
// into irreducibles.  Rows run over the product basis (m1 major, both m's
// descending); columns over coupled states, j descending from j1+j2, m
// descending within each j.  All entries are real in this phase convention:
// the highest-weight component at m1 = j1 is positive and lower states are
// generated by the total lowering operator.
struct CGTable {
  int two_j1 = 0;
  int two_j2 = 0;
  Eigen::MatrixXd u;
  std::vector<int> col_two_j;
  std::vector<int> col_two_m;

  int row(int two_m1, int two_m2) const;
  int col(int two_j, int two_m) const;
  double coeff(int two_m1, int two_m2, int two_j, int two_m) const;
};

// Cached, safe for concurrent lookup.
const CGTable& cg_table(int two_j1, int two_j2);

// <j1 m1, j2 m2 | j m>; zero outside the coupling range.
double cg_coeff(int two_j1, int two_m1, int two_j2, int two_m2, int two_j,
                int two_m);

}  // namespace holo
