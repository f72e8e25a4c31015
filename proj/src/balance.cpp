#include "gravbal/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gravbal {

namespace {

constexpr double kFitRankThreshold = 1e-10;

bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

GravityCoefficients gravity_coefficients(const MassSet& m, const ArchParams& a,
                                         double g) {
  GravityCoefficients c;
  c.shoulder = a.l1 * g *
               (0.5 * m.m1 + m.m2 + (5.0 / 6.0) * m.m3 + (2.0 / 3.0) * m.m4 +
                m.m5 / 3.0 + 0.5 * m.m6);
  c.elbow = m.m2 * g * a.l2 / 2.0 + m.m3 * g * a.l1 / 3.0 + m.m4 * g * a.l1 / 6.0;
  return c;
}

BalanceSolution solve_spring_constants(const MassSet& masses, const ArchParams& arch,
                                       double g) {
  if (!std::isfinite(arch.l1) || arch.l1 <= 0.0) {
    throw std::domain_error("solve_spring_constants: l1 must be positive");
  }
  if (!std::isfinite(arch.ls) || arch.ls <= 0.0 || !std::isfinite(arch.l5) ||
      arch.l5 <= 0.0) {
    throw std::domain_error("solve_spring_constants: ls and l5 must be positive");
  }
  if (!std::isfinite(g) || g <= 0.0) {
    throw std::domain_error("solve_spring_constants: g must be positive");
  }
  for (double m : {masses.m1, masses.m2, masses.m3, masses.m4, masses.m5, masses.m6}) {
    if (!finite_nonnegative(m)) {
      throw std::domain_error("solve_spring_constants: masses must be non-negative");
    }
  }

  const GravityCoefficients lhs = gravity_coefficients(masses, arch, g);
  const double l1_sq = arch.l1 * arch.l1;

  BalanceSolution sol;
  sol.springs.k1 = 81.0 * lhs.shoulder / (8.0 * l1_sq);
  sol.springs.k2 = lhs.elbow / (arch.l5 * arch.ls);
  sol.residual1 = lhs.shoulder - (8.0 / 81.0) * sol.springs.k1 * l1_sq;
  sol.residual2 = lhs.elbow - sol.springs.k2 * arch.l5 * arch.ls;
  return sol;
}

ExoModel balanced(ExoModel model) {
  model.springs = solve_spring_constants(model.masses, model.arch, model.g).springs;
  return model;
}

BasisFit fit_energy_basis(std::span<const EnergySample> samples) {
  if (samples.size() < 3) {
    throw DegenerateSampleError("fit_energy_basis: need at least 3 samples, got " +
                                std::to_string(samples.size()));
  }
  const auto rows = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd values(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const EnergySample& s = samples[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = std::sin(s.q.q1);
    design(i, 2) = std::sin(s.q.q1 + s.q.q2);
    values(i) = s.v;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(kFitRankThreshold);
  if (qr.rank() < 3) {
    throw DegenerateSampleError(
        "fit_energy_basis: samples do not separate {1, sin q1, sin(q1+q2)}");
  }
  const Eigen::Vector3d coeffs = qr.solve(values);
  const Eigen::VectorXd residual = design * coeffs - values;

  BasisFit fit;
  fit.c0 = coeffs(0);
  fit.c1 = coeffs(1);
  fit.c12 = coeffs(2);
  fit.max_fit_residual = residual.cwiseAbs().maxCoeff();
  return fit;
}

double GeneralizedTorque::norm() const { return std::hypot(dq1, dq2); }

GeneralizedTorque gravity_torque(const ExoModel& model, const Configuration& q,
                                 double h) {
  if (!std::isfinite(h) || h <= 0.0) {
    throw std::domain_error("gravity_torque: step h must be positive and finite");
  }
  auto v = [&](double q1, double q2) { return total_pe(model, {q1, q2}).v_total; };
  GeneralizedTorque t;
  t.dq1 = (v(q.q1 + h, q.q2) - v(q.q1 - h, q.q2)) / (2.0 * h);
  t.dq2 = (v(q.q1, q.q2 + h) - v(q.q1, q.q2 - h)) / (2.0 * h);
  return t;
}

BalanceReport check_balance(const ExoModel& model, std::size_t grid_n) {
  if (grid_n < 2) {
    throw std::domain_error("check_balance: grid_n must be at least 2");
  }
  std::vector<EnergySample> samples;
  samples.reserve(grid_n * grid_n);

  BalanceReport report;
  report.grid_n = grid_n;
  report.min = std::numeric_limits<double>::infinity();
  report.max = -std::numeric_limits<double>::infinity();

  // Row-major, fixed order: the mean is reproducible bit-for-bit.
  double sum = 0.0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double q1 = uniform_node(kShoulderMin, kShoulderMax, i, grid_n);
    for (std::size_t j = 0; j < grid_n; ++j) {
      const Configuration q{q1, uniform_node(kElbowMin, kElbowMax, j, grid_n)};
      const double v = total_pe(model, q).v_total;
      samples.push_back({q, v});
      sum += v;
      report.min = std::min(report.min, v);
      report.max = std::max(report.max, v);
      report.max_torque_norm =
          std::max(report.max_torque_norm, gravity_torque(model, q).norm());
    }
  }
  report.mean = sum / static_cast<double>(samples.size());
  report.relative_spread =
      (report.max - report.min) / std::max(1.0, std::abs(report.mean));
  report.fit = fit_energy_basis(samples);
  report.balanced = report.relative_spread < kBalanceSpreadThreshold;
  return report;
}

}  // namespace gravbal
