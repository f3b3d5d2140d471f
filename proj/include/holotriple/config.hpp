#pragma once

#include <string>
#include <vector>

#include "holotriple/su2.hpp"

namespace holo {

// Raised for anything the CLI maps to exit code 2: unreadable or malformed
// files, out-of-range values, missing prerequisites.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// One classical datum: edge id, holonomy, flux vector.
struct FieldEntry {
  int edge = 0;
  Mat2 u = Mat2::Identity();
  Vec3 p = Vec3::Zero();
};

struct RunConfig {
  int extent = 2;
  bool periodic = true;
  int level = 2;  // refinement level n; flux_scale defaults to 2^{-2n}
  int two_jmax = 2;
  double alpha = 1.0;
  std::vector<double> alpha_edges;  // per-edge weights when non-empty
  std::vector<double> tgrid = {0.8, 0.4, 0.2};
  double flux_scale = 0.0625;
  std::vector<FieldEntry> fields;
  unsigned long seed = 0;
  std::string out_dir = ".";

  // Which keys the file (or a flag) set explicitly; suites keep their own
  // defaults for everything left untouched.
  bool has_two_jmax = false;
  bool has_flux_scale = false;
  bool has_tgrid = false;
  bool has_alpha = false;
  bool has_extent = false;
};

// Parses the JSON config text.  Empty or whitespace-only input yields all
// defaults.  Malformed text or violated invariants throw ConfigError with a
// position diagnostic.
RunConfig config_from_json(const std::string& text);

// Reads and parses a config file; missing file throws ConfigError.
RunConfig load_config(const std::string& path);

// CSV rows: edge id, u as 4 reals (quaternion w x y z), p as 3 reals.
// Lines starting with '#' are skipped.  The quaternion is normalized;
// a near-zero norm is rejected.
std::vector<FieldEntry> fields_from_csv(const std::string& path);

// Quaternion components to SU(2), first row (w + iz, y + ix).
Mat2 quat_to_su2(double w, double x, double y, double z);

}  // namespace holo
