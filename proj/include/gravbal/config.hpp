#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gravbal/model.hpp"

namespace gravbal {

/// User-facing run parameters, read from a JSON document.
///
/// Recognised keys: l1, m1..m6, g, k1, k2, grid_n1, grid_n2, traj_n,
/// study_min, study_max, study_n, upper_fraction, out_dir. Only l1 is
/// required. Omitted stiffnesses are solved from the balance conditions.
struct RunConfig {
  double l1 = 0.0;
  MassSet masses;
  double g = kStandardGravity;
  std::optional<double> k1;
  std::optional<double> k2;
  std::size_t grid_n1 = 101;
  std::size_t grid_n2 = 101;
  std::size_t traj_n = 201;
  double study_min = 0.0;
  double study_max = 10.0;
  std::size_t study_n = 11;
  double upper_fraction = 0.5;
  std::string out_dir = "out";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message),
        key_(std::move(key)) {}

  /// Offending key, empty for document-level problems.
  [[nodiscard]] const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Parses and validates a config document. The resolved model must pass
/// validate_model; otherwise a ConfigError names the first violated field.
[[nodiscard]] RunConfig parse_config(std::string_view text);

[[nodiscard]] RunConfig load_config(const std::string& path);

/// Writes every field, so parse_config(serialize_config(c)) == c.
[[nodiscard]] std::string serialize_config(const RunConfig& config);

/// Mechanism described by the config, with any omitted stiffness solved.
[[nodiscard]] ExoModel build_model(const RunConfig& config);

}  // namespace gravbal
