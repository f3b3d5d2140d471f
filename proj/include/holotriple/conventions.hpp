#pragma once

#include <string>
#include <vector>

#include "holotriple/coherent.hpp"

namespace holo {

// Single record of every sign and scale choice the observable suites share.
// Calibrated once, persisted as JSON, loaded by every suite; nothing may
// re-derive these silently.
struct Conventions {
  // Bookkeeping fixed at build time, recorded so reports are self-describing.
  std::string generator_convention =
      "tau_a = i J_a; self-adjoint flux K_a = -i L_a";
  std::string flux_index_side = "end";
  std::string spinor_insertion_side = "sigma-left, conjugated endpoint field";
  std::string shell_amplitude = "(2j+1) exp(-t j(j+1))";

  // Calibrated constants.
  double s_cal = 2.0;
  double boost_sign = -1.0;
  double constraint_prefactor = 1.0;
  double dirac_ham_prefactor = 1.0;

  // Calibration provenance.
  bool calibrated = false;
  int calib_two_jmax = 0;
  std::vector<double> calib_tgrid;
  double flux_residual = 0.0;        // relative flux error at the fitted s_cal
  double constraint_residual = 0.0;  // ratio spread over the reference set

  ComplexifierScheme scheme(double flux_scale) const {
    return ComplexifierScheme{s_cal, boost_sign, flux_scale};
  }
};

std::string conventions_to_json(const Conventions& c);
Conventions conventions_from_json(const std::string& text);

void save_conventions(const Conventions& c, const std::string& path);
// Throws with a path-bearing message when missing or malformed.
Conventions load_conventions(const std::string& path);

}  // namespace holo
