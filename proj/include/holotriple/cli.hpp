#pragma once

#include <string>
#include <vector>

#include "holotriple/semiclassics.hpp"

namespace holo {

// Full dispatch: subcommands lattice, spectrum, expect, sweep,
// verify <suite>, calibrate.  Returns 0 on success, 1 when a verification
// check fails, 2 on configuration or usage errors.
int run(const std::vector<std::string>& args);

// Report serialization used by `verify` and the acceptance harness:
// {"suite": ..., "checks": [...], "env": {...}} with stable key order.
std::string report_to_json(const VerificationReport& r);

}  // namespace holo
