#pragma once

#include "gravbal/model.hpp"

namespace gravbal {

/// Potential energy at one configuration, in joules.
struct EnergyBreakdown {
  double v_g = 0.0;
  double v_s = 0.0;
  double v_total = 0.0;
};

/// Current endpoint distances of the two springs, in meters.
struct SpringLengths {
  double s1 = 0.0;
  double s2 = 0.0;
};

// All functions below throw std::domain_error on a non-finite configuration.

/// Gravitational potential of the six links with centres of mass at their
/// geometric midpoints. Links 5 and 6 contribute a constant offset through
/// the vertical parallelogram member.
[[nodiscard]] double gravitational_pe(const ExoModel& model, const Configuration& q);

/// Energy stored in the two zero-free-length springs.
[[nodiscard]] double elastic_pe(const ExoModel& model, const Configuration& q);

[[nodiscard]] EnergyBreakdown total_pe(const ExoModel& model, const Configuration& q);

/// Closed-form total energy of a balanced mechanism. Only meaningful when
/// the springs satisfy the balance conditions (see solve_spring_constants).
[[nodiscard]] double predicted_constant_energy(const ExoModel& model);

[[nodiscard]] SpringLengths spring_lengths(const ExoModel& model, const Configuration& q);

}  // namespace gravbal
