#include "holotriple/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace holo {

namespace {

using json = nlohmann::ordered_json;

bool all_space(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<double> number_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw ConfigError("config: " + key + " must be a list");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError("config: " + key + " entry not a number");
    out.push_back(v.get<double>());
  }
  return out;
}

void check_tgrid(const std::vector<double>& g) {
  if (g.size() < 2) throw ConfigError("config: t_grid needs at least 2 points");
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] <= 0.0) throw ConfigError("config: t_grid values must be positive");
    if (i > 0 && g[i] >= g[i - 1])
      throw ConfigError("config: t_grid must be strictly decreasing");
  }
}

FieldEntry entry_from_row(const std::vector<double>& row, const char* where) {
  if (row.size() != 8)
    throw ConfigError(std::string("config: ") + where +
                      " field row needs 8 values (edge, u*4, p*3)");
  FieldEntry e;
  e.edge = static_cast<int>(row[0]);
  if (e.edge < 0) throw ConfigError("config: field edge id negative");
  e.u = quat_to_su2(row[1], row[2], row[3], row[4]);
  e.p = Vec3(row[5], row[6], row[7]);
  return e;
}

}  // namespace

Mat2 quat_to_su2(double w, double x, double y, double z) {
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n < 1e-12) throw ConfigError("config: zero quaternion for holonomy");
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  Mat2 g;
  g << cd(w, z), cd(y, x), cd(-y, x), cd(w, -z);
  return g;
}

RunConfig config_from_json(const std::string& text) {
  RunConfig c;
  if (all_space(text)) return c;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");

  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "lattice" && k != "j_max" && k != "alpha" && k != "t_grid" &&
        k != "flux_scale" && k != "fields" && k != "fields_csv" &&
        k != "seed" && k != "out_dir")
      throw ConfigError("config: unknown key '" + k + "'");
  }

  if (j.contains("lattice")) {
    const json& l = j["lattice"];
    if (!l.is_object()) throw ConfigError("config: lattice must be an object");
    if (l.contains("extent")) {
      c.extent = l["extent"].get<int>();
      c.has_extent = true;
      if (c.extent < 1) throw ConfigError("config: extent must be >= 1");
    }
    if (l.contains("periodic")) c.periodic = l["periodic"].get<bool>();
    if (l.contains("level")) {
      c.level = l["level"].get<int>();
      if (c.level < 0) throw ConfigError("config: level must be >= 0");
    }
  }
  if (j.contains("j_max")) {
    double jm = j["j_max"].get<double>();
    int two_jm = static_cast<int>(std::lround(2.0 * jm));
    if (two_jm < 0 || std::abs(2.0 * jm - two_jm) > 1e-9)
      throw ConfigError("config: j_max must be a non-negative half-integer");
    c.two_jmax = two_jm;
    c.has_two_jmax = true;
  }
  if (j.contains("alpha")) {
    if (j["alpha"].is_number()) {
      c.alpha = j["alpha"].get<double>();
      if (c.alpha <= 0.0) throw ConfigError("config: alpha must be positive");
    } else {
      c.alpha_edges = number_list(j["alpha"], "alpha");
      for (double a : c.alpha_edges)
        if (a <= 0.0) throw ConfigError("config: alpha entries must be positive");
    }
    c.has_alpha = true;
  }
  if (j.contains("t_grid")) {
    c.tgrid = number_list(j["t_grid"], "t_grid");
    check_tgrid(c.tgrid);
    c.has_tgrid = true;
  }
  if (j.contains("flux_scale")) {
    c.flux_scale = j["flux_scale"].get<double>();
    if (c.flux_scale <= 0.0)
      throw ConfigError("config: flux_scale must be positive");
    c.has_flux_scale = true;
  } else {
    c.flux_scale = std::pow(2.0, -2.0 * c.level);
  }
  if (j.contains("fields")) {
    if (!j["fields"].is_array())
      throw ConfigError("config: fields must be a list of rows");
    for (const auto& row : j["fields"])
      c.fields.push_back(entry_from_row(number_list(row, "fields"), "inline"));
  }
  if (j.contains("fields_csv")) {
    auto extra = fields_from_csv(j["fields_csv"].get<std::string>());
    c.fields.insert(c.fields.end(), extra.begin(), extra.end());
  }
  if (j.contains("seed")) c.seed = j["seed"].get<unsigned long>();
  if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

std::vector<FieldEntry> fields_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read fields file " + path);
  std::vector<FieldEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (all_space(line)) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                          ": bad number '" + cell + "'");
      }
    }
    try {
      out.push_back(entry_from_row(row, "csv"));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " at " + path + ":" +
                        std::to_string(lineno));
    }
  }
  return out;
}

}  // namespace holo
