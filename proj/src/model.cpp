#include "gravbal/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gravbal {

namespace {

constexpr double kRatioTolerance = 1e-12;

bool matches_ratio(double actual, double expected) {
  return std::isfinite(actual) &&
         std::abs(actual - expected) <= kRatioTolerance * std::abs(expected);
}

void check_nonnegative(ValidationReport& report, const char* field, double value,
                       const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    report.push_back({field, std::string(what) + " must be finite and non-negative"});
  }
}

}  // namespace

MassSet MassSet::scaled(double factor) const {
  return {m1 * factor, m2 * factor, m3 * factor,
          m4 * factor, m5 * factor, m6 * factor};
}

ArchParams derive_architecture(double l1) {
  if (!std::isfinite(l1) || l1 <= 0.0) {
    throw std::domain_error("derive_architecture: l1 must be positive and finite");
  }
  ArchParams arch;
  arch.l1 = l1;
  arch.l2 = 0.9 * l1;
  arch.l3 = l1 / 3.0;
  arch.l4 = l1 / 3.0;
  arch.l5 = l1;
  arch.l6 = l1;
  arch.b1 = 4.0 * l1 / 9.0;
  arch.b2 = 2.0 * l1 / 9.0;
  arch.lt = l1 / 3.0;
  arch.ls = 35.0 * arch.l2 / 36.0;
  return arch;
}

ValidationReport validate_model(const ExoModel& model) {
  ValidationReport report;
  const ArchParams& a = model.arch;

  if (!std::isfinite(a.l1) || a.l1 <= 0.0) {
    report.push_back({"l1", "link length must be positive and finite"});
  } else {
    const ArchParams expected = derive_architecture(a.l1);
    const struct {
      const char* field;
      double actual;
      double expected;
      const char* rule;
    } ratios[] = {
        {"l2", a.l2, expected.l2, "l2 = 0.9 l1"},
        {"l3", a.l3, expected.l3, "l3 = l1/3"},
        {"l4", a.l4, expected.l4, "l4 = l1/3"},
        {"l5", a.l5, expected.l5, "l5 = l1"},
        {"l6", a.l6, expected.l6, "l6 = l1"},
        {"b1", a.b1, expected.b1, "b1 = 4/9 l1"},
        {"b2", a.b2, expected.b2, "b2 = 2/9 l1"},
        {"lt", a.lt, expected.lt, "lt = l1/3"},
        {"ls", a.ls, expected.ls, "ls = 35/36 l2 = 0.875 l1"},
    };
    for (const auto& r : ratios) {
      if (!matches_ratio(r.actual, r.expected)) {
        report.push_back({r.field, std::string("architecture ratio violated: ") + r.rule});
      }
    }
  }

  const MassSet& m = model.masses;
  check_nonnegative(report, "m1", m.m1, "mass");
  check_nonnegative(report, "m2", m.m2, "mass");
  check_nonnegative(report, "m3", m.m3, "mass");
  check_nonnegative(report, "m4", m.m4, "mass");
  check_nonnegative(report, "m5", m.m5, "mass");
  check_nonnegative(report, "m6", m.m6, "mass");
  check_nonnegative(report, "k1", model.springs.k1, "stiffness");
  check_nonnegative(report, "k2", model.springs.k2, "stiffness");

  if (!std::isfinite(model.g) || model.g <= 0.0) {
    report.push_back({"g", "gravitational acceleration must be positive and finite"});
  }
  return report;
}

std::string to_string(const ValidationReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (i != 0) os << "; ";
    os << report[i].field << ": " << report[i].message;
  }
  return os.str();
}

bool in_shooting_range(const Configuration& q) {
  return q.q1 >= kShoulderMin && q.q1 <= kShoulderMax && q.q2 >= kElbowMin &&
         q.q2 <= kElbowMax;
}

double uniform_node(double lo, double hi, std::size_t i, std::size_t n) {
  if (n < 2) return lo;
  const double fraction = static_cast<double>(i) / static_cast<double>(n - 1);
  return lo + (hi - lo) * fraction;
}

}  // namespace gravbal
