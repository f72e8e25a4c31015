#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace gravbal {

inline constexpr double kStandardGravity = 9.81;  // m/s^2

/// Link lengths and spring attachment distances of the six-link arm, in meters.
///
/// Every field is fixed by l1 through the architecture ratios; build one with
/// derive_architecture(). The energy expressions only hold under those ratios.
struct ArchParams {
  double l1 = 0.0;
  double l2 = 0.0;  // forearm link, 0.9 l1
  double l3 = 0.0;
  double l4 = 0.0;
  double l5 = 0.0;
  double l6 = 0.0;
  double b1 = 0.0;  // spring-1 fixed point above joint 1
  double b2 = 0.0;  // spring-1 attachment along link 1
  double ls = 0.0;  // spring-2 attachment along link 2
  double lt = 0.0;  // link-5 joint along link 6; enters no energy term

  friend bool operator==(const ArchParams&, const ArchParams&) = default;
};

/// Link masses in kg. m1 and m2 include the player's upper arm and forearm.
struct MassSet {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double m5 = 0.0;
  double m6 = 0.0;

  [[nodiscard]] MassSet scaled(double factor) const;

  friend bool operator==(const MassSet&, const MassSet&) = default;
};

/// Zero-free-length spring stiffnesses in N/m.
struct SpringPair {
  double k1 = 0.0;
  double k2 = 0.0;

  friend bool operator==(const SpringPair&, const SpringPair&) = default;
};

struct ExoModel {
  ArchParams arch;
  MassSet masses;
  SpringPair springs;
  double g = kStandardGravity;
};

/// Shoulder (q1) and elbow (q2) angles in radians. Any finite value is
/// accepted; the shooting motion spans q1 in [-pi/2, pi/2], q2 in [0, pi].
struct Configuration {
  double q1 = 0.0;
  double q2 = 0.0;
};

/// Throws std::domain_error unless l1 is positive and finite.
[[nodiscard]] ArchParams derive_architecture(double l1);

struct ValidationIssue {
  std::string field;
  std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

/// Lists every violated invariant; an empty report means the model is valid.
[[nodiscard]] ValidationReport validate_model(const ExoModel& model);

[[nodiscard]] std::string to_string(const ValidationReport& report);

// Shooting range of motion, radians.
inline constexpr double kShoulderMin = -std::numbers::pi / 2.0;
inline constexpr double kShoulderMax = std::numbers::pi / 2.0;
inline constexpr double kElbowMin = 0.0;
inline constexpr double kElbowMax = std::numbers::pi;

[[nodiscard]] bool in_shooting_range(const Configuration& q);

/// Node i of n uniformly spaced points on [lo, hi], endpoints included.
/// Nodes of an n-point axis coincide bit-for-bit with the even nodes of the
/// (2n-1)-point axis.
[[nodiscard]] double uniform_node(double lo, double hi, std::size_t i, std::size_t n);

}  // namespace gravbal
