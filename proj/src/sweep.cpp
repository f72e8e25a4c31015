#include "gravbal/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gravbal {

std::vector<GridSample> sweep_grid(const ExoModel& model, std::size_t n1, std::size_t n2) {
  if (n1 < 2 || n2 < 2) {
    throw std::domain_error("sweep_grid: grid counts must be at least 2");
  }
  std::vector<GridSample> out;
  out.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    const double q1 = uniform_node(kShoulderMin, kShoulderMax, i, n1);
    for (std::size_t j = 0; j < n2; ++j) {
      const double q2 = uniform_node(kElbowMin, kElbowMax, j, n2);
      const EnergyBreakdown e = total_pe(model, {q1, q2});
      out.push_back({q1, q2, e.v_g, e.v_s, e.v_total});
    }
  }
  return out;
}

Configuration shooting_profile(double t) {
  // sin(pi t) evaluated on the nearer half so both endpoints give exactly 0.
  const double bump = std::sin(std::numbers::pi * std::min(t, 1.0 - t));
  return {kShoulderMin + std::numbers::pi * t, (std::numbers::pi / 2.0) * bump};
}

std::vector<TrajectoryPoint> shooting_trajectory(const ExoModel& model, std::size_t n,
                                                 double h) {
  if (n < 2) {
    throw std::domain_error("shooting_trajectory: need at least 2 points");
  }
  std::vector<TrajectoryPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    TrajectoryPoint p;
    p.t = uniform_node(0.0, 1.0, i, n);
    p.q = shooting_profile(p.t);
    p.energies = total_pe(model, p.q);
    p.torque = gravity_torque(model, p.q, h);
    out.push_back(p);
  }
  return out;
}

std::vector<MassStudyRow> mass_study(const MassSet& structural_masses,
                                     const ArchParams& arch, double g,
                                     const MassStudyRange& range) {
  if (!std::isfinite(range.arm_mass_min) || !std::isfinite(range.arm_mass_max) ||
      range.arm_mass_min < 0.0 || range.arm_mass_max < range.arm_mass_min) {
    throw std::domain_error("mass_study: need 0 <= arm_mass_min <= arm_mass_max");
  }
  if (range.n < 2) {
    throw std::domain_error("mass_study: need at least 2 rows");
  }
  if (!(range.upper_fraction >= 0.0 && range.upper_fraction <= 1.0)) {
    throw std::domain_error("mass_study: upper_fraction must lie in [0, 1]");
  }

  std::vector<MassStudyRow> rows;
  rows.reserve(range.n);
  for (std::size_t i = 0; i < range.n; ++i) {
    const double added = uniform_node(range.arm_mass_min, range.arm_mass_max, i, range.n);
    ExoModel model;
    model.arch = arch;
    model.g = g;
    model.masses = structural_masses;
    model.masses.m1 += range.upper_fraction * added;
    model.masses.m2 += (1.0 - range.upper_fraction) * added;
    model.springs = solve_spring_constants(model.masses, arch, g).springs;

    rows.push_back({added, model.masses.m1, model.masses.m2, model.springs.k1,
                    model.springs.k2, predicted_constant_energy(model)});
  }
  return rows;
}

}  // namespace gravbal
