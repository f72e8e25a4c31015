#include "gravbal/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gravbal {

namespace {

void require_finite(const Configuration& q) {
  if (!std::isfinite(q.q1) || !std::isfinite(q.q2)) {
    throw std::domain_error("configuration angles must be finite");
  }
}

}  // namespace

double gravitational_pe(const ExoModel& model, const Configuration& q) {
  require_finite(q);
  const ArchParams& a = model.arch;
  const MassSet& m = model.masses;
  const double s1 = std::sin(q.q1);
  const double s12 = std::sin(q.q1 + q.q2);

  const double height_sum =
      m.m1 * (a.l1 / 2.0) * s1 +
      m.m2 * (a.l1 * s1 + (a.l2 / 2.0) * s12) +
      m.m3 * a.l1 * ((5.0 / 6.0) * s1 + (1.0 / 3.0) * s12) +
      m.m4 * a.l1 * ((2.0 / 3.0) * s1 + (1.0 / 6.0) * s12) +
      m.m5 * ((a.l1 / 3.0) * s1 + a.l5 / 2.0) +
      m.m6 * ((a.l1 / 2.0) * s1 + a.l5);
  return model.g * height_sum;
}

double elastic_pe(const ExoModel& model, const Configuration& q) {
  require_finite(q);
  const ArchParams& a = model.arch;
  const SpringPair& k = model.springs;
  const double spring1 =
      0.5 * k.k1 * a.l1 * a.l1 * (20.0 / 81.0 - (16.0 / 81.0) * std::sin(q.q1));
  const double spring2 =
      0.5 * k.k2 *
      (a.l5 * a.l5 + a.ls * a.ls - 2.0 * a.l5 * a.ls * std::sin(q.q1 + q.q2));
  return spring1 + spring2;
}

EnergyBreakdown total_pe(const ExoModel& model, const Configuration& q) {
  EnergyBreakdown e;
  e.v_g = gravitational_pe(model, q);
  e.v_s = elastic_pe(model, q);
  e.v_total = e.v_g + e.v_s;
  return e;
}

double predicted_constant_energy(const ExoModel& model) {
  const ArchParams& a = model.arch;
  const MassSet& m = model.masses;
  const SpringPair& k = model.springs;
  return model.g * a.l5 * (m.m5 / 2.0 + m.m6) +
         (10.0 / 81.0) * k.k1 * a.l1 * a.l1 +
         0.5 * k.k2 * (a.l5 * a.l5 + a.ls * a.ls);
}

SpringLengths spring_lengths(const ExoModel& model, const Configuration& q) {
  require_finite(q);
  const ArchParams& a = model.arch;
  // Law of cosines; radicands can dip below zero by round-off at alignment.
  const double r1 = a.b1 * a.b1 + a.b2 * a.b2 - 2.0 * a.b1 * a.b2 * std::sin(q.q1);
  const double r2 =
      a.l5 * a.l5 + a.ls * a.ls - 2.0 * a.l5 * a.ls * std::sin(q.q1 + q.q2);
  return {std::sqrt(std::max(r1, 0.0)), std::sqrt(std::max(r2, 0.0))};
}

}  // namespace gravbal
