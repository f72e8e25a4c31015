#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "gravbal/energy.hpp"
#include "gravbal/model.hpp"

namespace gravbal {

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;  // rad
inline constexpr double kBalanceSpreadThreshold = 1e-9;

/// Spring stiffnesses that cancel the sin(q1) and sin(q1+q2) terms of the
/// gravitational energy, with the leftover of each balance condition.
struct BalanceSolution {
  SpringPair springs;
  double residual1 = 0.0;  // J, shoulder condition (gravity side minus spring side)
  double residual2 = 0.0;  // J, elbow condition
};

/// Closed-form solve of the two balance conditions. Each is linear in one
/// stiffness, so there is no iteration.
///
/// Throws std::domain_error if l1 or ls is not positive, g is not positive,
/// or any mass is negative or non-finite.
[[nodiscard]] BalanceSolution solve_spring_constants(const MassSet& masses,
                                                     const ArchParams& arch, double g);

/// Left-hand sides of the balance conditions: the gravitational coefficients
/// of sin(q1) and sin(q1+q2) in joules.
struct GravityCoefficients {
  double shoulder = 0.0;
  double elbow = 0.0;
};

[[nodiscard]] GravityCoefficients gravity_coefficients(const MassSet& masses,
                                                       const ArchParams& arch, double g);

/// Returns the model with springs replaced by the balancing pair.
[[nodiscard]] ExoModel balanced(ExoModel model);

struct EnergySample {
  Configuration q;
  double v = 0.0;
};

/// Least-squares fit of V(q) = c0 + c1 sin(q1) + c12 sin(q1+q2).
struct BasisFit {
  double c0 = 0.0;
  double c1 = 0.0;
  double c12 = 0.0;
  double max_fit_residual = 0.0;
};

class DegenerateSampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DegenerateSampleError when fewer than three samples are given or
/// the design matrix {1, sin q1, sin(q1+q2)} is rank deficient.
[[nodiscard]] BasisFit fit_energy_basis(std::span<const EnergySample> samples);

/// Generalized torque dV/dq by central differences on the total energy.
struct GeneralizedTorque {
  double dq1 = 0.0;  // J/rad
  double dq2 = 0.0;  // J/rad

  [[nodiscard]] double norm() const;
};

/// Throws std::domain_error if h is not positive and finite.
[[nodiscard]] GeneralizedTorque gravity_torque(
    const ExoModel& model, const Configuration& q,
    double h = kDefaultFiniteDifferenceStep);

struct BalanceReport {
  std::size_t grid_n = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double relative_spread = 0.0;  // (max - min) / max(1, |mean|)
  BasisFit fit;
  double max_torque_norm = 0.0;
  bool balanced = false;
};

/// Samples total energy over a grid_n x grid_n grid of the shooting range
/// and judges the mechanism balanced iff the relative spread is below
/// kBalanceSpreadThreshold. Throws std::domain_error if grid_n < 2.
[[nodiscard]] BalanceReport check_balance(const ExoModel& model, std::size_t grid_n);

}  // namespace gravbal
