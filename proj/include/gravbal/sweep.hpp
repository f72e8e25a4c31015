#pragma once

#include <cstddef>
#include <vector>

#include "gravbal/balance.hpp"
#include "gravbal/energy.hpp"
#include "gravbal/model.hpp"

namespace gravbal {

struct GridSample {
  double q1 = 0.0;
  double q2 = 0.0;
  double v_g = 0.0;
  double v_s = 0.0;
  double v_total = 0.0;
};

/// n1 x n2 energy samples over the shooting range, endpoints included,
/// row-major with q1 outer. Throws std::domain_error if a count is below 2.
[[nodiscard]] std::vector<GridSample> sweep_grid(const ExoModel& model, std::size_t n1,
                                                 std::size_t n2);

struct TrajectoryPoint {
  double t = 0.0;
  Configuration q;
  EnergyBreakdown energies;
  GeneralizedTorque torque;
};

/// Shooting motion at phase t in [0, 1]: the shoulder rises linearly from
/// -pi/2 to pi/2 while the elbow bends to pi/2 at mid-motion and back to 0.
[[nodiscard]] Configuration shooting_profile(double t);

/// Throws std::domain_error if n < 2.
[[nodiscard]] std::vector<TrajectoryPoint> shooting_trajectory(
    const ExoModel& model, std::size_t n, double h = kDefaultFiniteDifferenceStep);

struct MassStudyRow {
  double added_arm_mass = 0.0;  // kg
  double m1_eff = 0.0;
  double m2_eff = 0.0;
  double k1 = 0.0;  // N/m
  double k2 = 0.0;
  double constant_v = 0.0;  // J
};

struct MassStudyRange {
  double arm_mass_min = 0.0;
  double arm_mass_max = 0.0;
  std::size_t n = 2;
  double upper_fraction = 0.5;  // share of the arm mass carried by link 1
};

/// Re-solves the springs for n arm masses spread uniformly over the range.
/// The arm mass is split between link 1 (upper_fraction) and link 2.
/// Throws std::domain_error on an invalid range, count or fraction.
[[nodiscard]] std::vector<MassStudyRow> mass_study(const MassSet& structural_masses,
                                                   const ArchParams& arch, double g,
                                                   const MassStudyRange& range);

}  // namespace gravbal
