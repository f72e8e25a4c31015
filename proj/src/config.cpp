#include "gravbal/config.hpp"

#include <cmath>
#include <fstream>
#include <array>
#include <sstream>

#include <json.hpp>

#include "gravbal/balance.hpp"

namespace gravbal {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 18> kKnownKeys = {
    "l1",      "m1",      "m2",     "m3",        "m4",        "m5",
    "m6",      "g",       "k1",     "k2",        "grid_n1",   "grid_n2",
    "traj_n",  "study_min", "study_max", "study_n", "upper_fraction", "out_dir"};

double read_real(const json& doc, const std::string& key, double fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number()) throw ConfigError(key, "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ConfigError(key, "value must be finite");
  return v;
}

std::size_t read_count(const json& doc, const std::string& key, std::size_t fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer()) throw ConfigError(key, "expected an integer count");
  if (it->is_number_unsigned()) {
    const auto v = it->get<std::uint64_t>();
    if (v >= 2) return static_cast<std::size_t>(v);
  }
  throw ConfigError(key, "count must be at least 2");
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ConfigError("", std::string("malformed config document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("", "config document must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (std::string_view k : kKnownKeys) known = known || item.key() == k;
    if (!known) throw ConfigError(item.key(), "unknown key");
  }
  if (!doc.contains("l1")) throw ConfigError("l1", "missing required key");

  RunConfig c;
  c.l1 = read_real(doc, "l1", 0.0);
  c.masses.m1 = read_real(doc, "m1", 0.0);
  c.masses.m2 = read_real(doc, "m2", 0.0);
  c.masses.m3 = read_real(doc, "m3", 0.0);
  c.masses.m4 = read_real(doc, "m4", 0.0);
  c.masses.m5 = read_real(doc, "m5", 0.0);
  c.masses.m6 = read_real(doc, "m6", 0.0);
  c.g = read_real(doc, "g", kStandardGravity);
  if (doc.contains("k1")) c.k1 = read_real(doc, "k1", 0.0);
  if (doc.contains("k2")) c.k2 = read_real(doc, "k2", 0.0);
  c.grid_n1 = read_count(doc, "grid_n1", c.grid_n1);
  c.grid_n2 = read_count(doc, "grid_n2", c.grid_n2);
  c.traj_n = read_count(doc, "traj_n", c.traj_n);
  c.study_min = read_real(doc, "study_min", c.study_min);
  c.study_max = read_real(doc, "study_max", c.study_max);
  c.study_n = read_count(doc, "study_n", c.study_n);
  c.upper_fraction = read_real(doc, "upper_fraction", c.upper_fraction);
  if (const auto it = doc.find("out_dir"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("out_dir", "expected a string");
    c.out_dir = it->get<std::string>();
  }

  if (c.l1 <= 0.0) throw ConfigError("l1", "link length must be positive");
  if (c.study_min < 0.0 || c.study_max < c.study_min) {
    throw ConfigError("study_max", "need 0 <= study_min <= study_max");
  }
  if (c.upper_fraction < 0.0 || c.upper_fraction > 1.0) {
    throw ConfigError("upper_fraction", "must lie in [0, 1]");
  }

  // Validate the physical model with placeholder springs first: a negative
  // mass would otherwise surface as a confusing negative stiffness.
  ExoModel probe;
  probe.arch = derive_architecture(c.l1);
  probe.masses = c.masses;
  probe.g = c.g;
  probe.springs = {c.k1.value_or(0.0), c.k2.value_or(0.0)};
  if (const ValidationReport report = validate_model(probe); !report.empty()) {
    throw ConfigError(report.front().field, "invalid model: " + to_string(report));
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  json doc = json::object();
  doc["l1"] = c.l1;
  doc["m1"] = c.masses.m1;
  doc["m2"] = c.masses.m2;
  doc["m3"] = c.masses.m3;
  doc["m4"] = c.masses.m4;
  doc["m5"] = c.masses.m5;
  doc["m6"] = c.masses.m6;
  doc["g"] = c.g;
  if (c.k1) doc["k1"] = *c.k1;
  if (c.k2) doc["k2"] = *c.k2;
  doc["grid_n1"] = c.grid_n1;
  doc["grid_n2"] = c.grid_n2;
  doc["traj_n"] = c.traj_n;
  doc["study_min"] = c.study_min;
  doc["study_max"] = c.study_max;
  doc["study_n"] = c.study_n;
  doc["upper_fraction"] = c.upper_fraction;
  doc["out_dir"] = c.out_dir;
  return doc.dump(2) + "\n";
}

ExoModel build_model(const RunConfig& c) {
  ExoModel model;
  model.arch = derive_architecture(c.l1);
  model.masses = c.masses;
  model.g = c.g;
  model.springs = solve_spring_constants(model.masses, model.arch, model.g).springs;
  if (c.k1) model.springs.k1 = *c.k1;
  if (c.k2) model.springs.k2 = *c.k2;
  return model;
}

}  // namespace gravbal
