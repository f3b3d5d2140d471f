#pragma once

#include <array>
#include <vector>

#include "holotriple/classical.hpp"
#include "holotriple/holoflux.hpp"

namespace holo {

// Peaking data for one edge: classical group element u, flux 3-vector p,
// spread parameter t.
struct CoherentLabel {
  Mat2 u = Mat2::Identity();
  Vec3 p = Vec3::Zero();
  double t = 0.1;
};

// Fixed construction constants: the group label is
//   h = u * exp(boost_sign * s_cal * flux_scale * (p . sigma) / 2),
// and shell j carries amplitude (2j+1) exp(-t j(j+1)).
struct ComplexifierScheme {
  double s_cal = 2.0;
  double boost_sign = -1.0;
  double flux_scale = 1.0;
};

Mat2 coherent_group_label(const CoherentLabel& l, const ComplexifierScheme& s);

// Unnormalized basis coefficients of the truncated state.
Vec coherent_coeffs(const CoherentLabel& l, const EdgeSpace& space,
                    const ComplexifierScheme& s);

// Normalized truncated state on one edge.  Throws for t <= 0.
Vec coherent_edge_vec(const CoherentLabel& l, const EdgeSpace& space,
                      const ComplexifierScheme& s);

// Squared norm the untruncated state carries on one shell.
double coherent_shell_weight(const CoherentLabel& l, int two_j,
                             const ComplexifierScheme& s);

struct TailReport {
  double kept_top_fraction = 0.0;  // shells above j_max - 1 within the kept state
  double residue = 0.0;            // reference-estimated mass above j_max
};
TailReport coherent_tail(const CoherentLabel& l, const EdgeSpace& space,
                         const ComplexifierScheme& s, int two_jmax_ref = 0);

cd coherent_overlap(const CoherentLabel& a, const CoherentLabel& b,
                    const EdgeSpace& space, const ComplexifierScheme& s);

// Matrix of expectations of the fundamental-entry multiplication operators.
Mat2 holonomy_expectation(const CoherentLabel& l, const EdgeSpace& space,
                          const ComplexifierScheme& s);

// <state| t L^a |state>.
cd flux_expectation(const CoherentLabel& l, const EdgeSpace& space, int a,
                    const ComplexifierScheme& s);

// Observable tag: the constant 1, one fundamental matrix entry, or the
// fundamental character.
struct FuncTag {
  enum Kind { kUnit, kEntry, kCharacter };
  Kind kind = kUnit;
  int r = 0, c = 0;
  static FuncTag unit() { return {}; }
  static FuncTag entry(int r, int c) { return {kEntry, r, c}; }
  static FuncTag character() { return {kCharacter, 0, 0}; }
};

struct Monomial {
  cd coeff{1.0};
  std::array<int, 3> powers{0, 0, 0};  // exponents of t L^1, t L^2, t L^3
};

// <state| M_f  (tL^1)^{k1} (tL^2)^{k2} (tL^3)^{k3}-products |state>, factors
// ordered 1, 2, 3 left to right within each monomial.  Requires
// two_jmax >= 2 * total degree.
cd polynomial_expectation(const CoherentLabel& l, const EdgeSpace& space,
                          const FuncTag& f, const std::vector<Monomial>& poly,
                          const ComplexifierScheme& s);

// Classical target of the same observable: f(u) * P(i p_a flux_scale).
cd polynomial_classical(const CoherentLabel& l, const FuncTag& f,
                        const std::vector<Monomial>& poly,
                        const ComplexifierScheme& s);

// Order-1 Richardson extrapolation on a halving grid t, t/2, t/4, ...
struct Extrapolation {
  cd value{0.0};
  double residual = 0.0;
};
Extrapolation richardson1(const std::vector<double>& ts,
                          const std::vector<cd>& values);

// Product state over a composite space: coherent factors on the edges,
// given reference vectors elsewhere (empty ref = first basis vector; the
// vertex default is the uniform vector).
StateVector coherent_product_state(const CompositeSpace* sp,
                                   const std::vector<CoherentLabel>& labels,
                                   const ComplexifierScheme& s,
                                   const Vec& clifford_ref = Vec(),
                                   const Vec& spinor_ref = Vec(),
                                   const Vec& vertex_ref = Vec());

// Expectation of a word operator as a 2x2 spinor-block matrix on the product
// coherent state built from the phase point's labels.
Mat2 word_expectation_matrix(const CubicLattice& lat, const CompositeSpace* sp,
                             const ClassicalPhasePoint& ph, double t,
                             const ComplexifierScheme& s, const PathWord& w);

// Constant lapse and shift insertion N * 1 + N^a sigma_a.
struct LapseShift {
  double lapse = 1.0;
  Vec3 shift = Vec3::Zero();
  Mat2 matrix() const;
};

// Per-vertex 2x2 spinor field.  Quaternionic entries (w 1 + i x . sigma)
// keep the Dirac pairing free of zeroth-order contact terms.
struct SpinorField {
  std::vector<Mat2> psi;
};

Mat2 quaternionic(double w, const Vec3& x);

// Mixed-reference dressed state: branches run over an orthonormal basis of
// the Clifford and spinor factors (trace state on both), each branch holding
// the degree-0 part (vertex-projected psi on the base product state) and the
// degree-1 part (one Clifford generator times the transported spinor
// insertion per edge and direction).
struct DressedState {
  const CompositeSpace* space = nullptr;
  std::vector<Vec> base_branches;
  std::vector<Vec> insert_branches;
  double weight = 0.0;  // shared branch weight
  double norm2 = 0.0;
  double base_norm2 = 0.0;
  double insert_norm2 = 0.0;
  std::vector<double> insertion_amps;  // per edge factor
};

// Builds the dressed state from classical data.  The insertion on edge factor
// i with direction a applies gamma_{3i+a} and the spinor word
// sigma_a M l_i psi(dst) l_i^{-1} based at src: only the endpoint field is
// conjugated, sigma_a and the optional lapse-shift matrix M multiply from the
// left.  Throws if the spinor field vanishes identically or the space lacks a
// needed factor.
DressedState dressed_state(const CubicLattice& lat, const CompositeSpace* sp,
                           const ClassicalPhasePoint& ph,
                           const SpinorField& psi, double t,
                           const ComplexifierScheme& s, double insertion_amp,
                           const LapseShift* ls = nullptr);

// Branch-averaged normalized expectation <Xi|op|Xi>.
cd dressed_expectation(const DressedState& ds, const SparseOperator& op);

}  // namespace holo
