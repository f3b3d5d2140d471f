#include "holotriple/conventions.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace holo {

namespace {
using json = nlohmann::ordered_json;
}

std::string conventions_to_json(const Conventions& c) {
  json j;
  j["generator_convention"] = c.generator_convention;
  j["flux_index_side"] = c.flux_index_side;
  j["spinor_insertion_side"] = c.spinor_insertion_side;
  j["shell_amplitude"] = c.shell_amplitude;
  j["s_cal"] = c.s_cal;
  j["boost_sign"] = c.boost_sign;
  j["constraint_prefactor"] = c.constraint_prefactor;
  j["dirac_ham_prefactor"] = c.dirac_ham_prefactor;
  j["calibrated"] = c.calibrated;
  j["calib_two_jmax"] = c.calib_two_jmax;
  j["calib_tgrid"] = c.calib_tgrid;
  j["flux_residual"] = c.flux_residual;
  j["constraint_residual"] = c.constraint_residual;
  return j.dump(2) + "\n";
}

Conventions conventions_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("conventions: parse error: ") +
                             e.what());
  }
  Conventions c;
  c.generator_convention =
      j.value("generator_convention", c.generator_convention);
  c.flux_index_side = j.value("flux_index_side", c.flux_index_side);
  c.spinor_insertion_side =
      j.value("spinor_insertion_side", c.spinor_insertion_side);
  c.shell_amplitude = j.value("shell_amplitude", c.shell_amplitude);
  c.s_cal = j.value("s_cal", c.s_cal);
  c.boost_sign = j.value("boost_sign", c.boost_sign);
  c.constraint_prefactor = j.value("constraint_prefactor", c.constraint_prefactor);
  c.dirac_ham_prefactor = j.value("dirac_ham_prefactor", c.dirac_ham_prefactor);
  c.calibrated = j.value("calibrated", c.calibrated);
  c.calib_two_jmax = j.value("calib_two_jmax", c.calib_two_jmax);
  c.calib_tgrid = j.value("calib_tgrid", c.calib_tgrid);
  c.flux_residual = j.value("flux_residual", c.flux_residual);
  c.constraint_residual = j.value("constraint_residual", c.constraint_residual);
  if (c.s_cal <= 0.0)
    throw std::runtime_error("conventions: s_cal must be positive");
  if (c.boost_sign != 1.0 && c.boost_sign != -1.0)
    throw std::runtime_error("conventions: boost_sign must be +1 or -1");
  return c;
}

void save_conventions(const Conventions& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("conventions: cannot write " + path);
  out << conventions_to_json(c);
}

Conventions load_conventions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("conventions: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return conventions_from_json(ss.str());
}

}  // namespace holo
