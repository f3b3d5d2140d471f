#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "holotriple/classical.hpp"
#include "holotriple/coherent.hpp"
#include "holotriple/conventions.hpp"
#include "holotriple/dirac.hpp"

namespace holo {

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double target = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> env;

  bool all_pass() const;
  // |measured - target| <= tol
  void check_close(const std::string& name, double measured, double target,
                   double tol, const std::string& note = "");
  // measured <= bound
  void check_below(const std::string& name, double measured, double bound,
                   const std::string& note = "");
  // measured >= floor
  void check_above(const std::string& name, double measured, double floor,
                   const std::string& note = "");
  // informational record, always passing
  void record(const std::string& name, double value,
              const std::string& note = "");
  void env_add(const std::string& key, const std::string& value);
};

// Exact commutator identities between flux derivations and holonomy
// multiplication: endpoint insertions for both orientations, vanishing for
// disjoint edges, and the flux algebra itself.
VerificationReport verify_poisson(int two_jmax, const Conventions& cv);

// Structural commutator norms of the Dirac operator with the lattice
// symmetry generators of the periodic cube: uniform weights must commute,
// the designated non-uniform weights must not.  Includes a dense
// cross-check on a small space.
VerificationReport verify_diffeo(int extent, int two_jmax,
                                 const Conventions& cv);

// Scalar symbol of the transported spinor bracket on one edge,
//   f_a(g) = tr(psi_src^dagger sigma_a m g psi_dst g^{-1}):
// only the endpoint field is conjugated.
FuncPW transported_bracket_symbol(const Mat2& psi_src, const Mat2& psi_dst,
                                  const Mat2& m, int a);

// One edge's Dirac pairing sum_a <phi| (-i)(t L^a) M_{f_a} |phi> on the
// truncated edge space, and its classical companion
// sum_a flux_scale p_a f_a(u).
cd edge_pairing(const CoherentLabel& l, const EdgeSpace& space,
                const Mat2& psi_src, const Mat2& psi_dst, const Mat2& m,
                const ComplexifierScheme& s);
cd edge_pairing_classical(const CoherentLabel& l, const Mat2& psi_src,
                          const Mat2& psi_dst, const Mat2& m,
                          const ComplexifierScheme& s);

struct DiracHamConfig {
  int two_jmax = 2;
  double flux_scale = 0.0625;
  double alpha = 1.0;
  std::vector<double> tgrid{0.8, 0.4, 0.2};
  double lapse2 = 1.7;  // second lapse value for the linearity check
};

// Compares the extrapolated quantum pairing against the discretized
// classical functional at the interior vertex of the open cube, for a
// vanishing connection with a linear spinor field and for a non-abelian
// connection; checks exact lapse linearity.
VerificationReport verify_dirac_hamiltonian(const DiracHamConfig& cfg,
                                            const Conventions& cv);

struct ConstraintConfig {
  int two_jmax = 2;
  double flux_scale = 0.25;
  std::vector<double> tgrid{0.8, 0.4, 0.2};
  std::vector<double> magnitudes{0.15, 0.3, 0.45};
};

// Plaquette-constraint expectation on a product coherent state with the
// spinor factor traced out.
cd constraint_expectation(const CubicLattice& lat, const CompositeSpace* sp,
                          const std::array<int, 4>& letters,
                          const std::vector<CoherentLabel>& labels, double t,
                          double prefactor, const ComplexifierScheme& s);

// Classical target: prefactor times eps_{abc} p_a q_b F_c with p, q the
// scaled fluxes of the two base-vertex edges and F the loop curvature.
cd constraint_classical(const CubicLattice& lat, const ClassicalPhasePoint& ph,
                        const PathWord& plaq, double prefactor);

// Flat background must extrapolate to zero; a generic background must give a
// quantum/classical ratio constant across the curvature magnitudes.
VerificationReport verify_hamiltonian(const ConstraintConfig& cfg,
                                      const Conventions& cv);

struct M2Config {
  int two_jmax = 4;
  double t = 0.15;
  double flux_scale = 0.25;
};

// Ascending singular values of the stacked vectorized word-expectation
// matrices.
std::vector<double> word_span_singulars(const CubicLattice& lat,
                                        const CompositeSpace* sp,
                                        const ClassicalPhasePoint& ph,
                                        double t, const ComplexifierScheme& s,
                                        const std::vector<PathWord>& words);

// Generic pair of loop holonomies must span all four matrix dimensions;
// commuting and identity backgrounds are detected as rank 2 and rank 1.
VerificationReport verify_m2(const M2Config& cfg, const Conventions& cv);

// Fits s_cal (and fixes boost_sign) by bisection on the extrapolated flux
// ratio, then sets the constraint prefactor from a reference curved
// background.  The returned document carries the fit residuals.
Conventions calibrate_conventions(int two_jmax,
                                  const std::vector<double>& tgrid);

}  // namespace holo
