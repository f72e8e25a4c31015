// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
// Expected values come from the shooting-study inputs (m1 = 4.6 kg, m2 = 1 kg,
// l1 = 0.30 m, g = 9.81 m/s^2) and the oracle in tests/oracles.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gravbal/balance.hpp"
#include "gravbal/cli.hpp"
#include "gravbal/energy.hpp"
#include "gravbal/model.hpp"
#include "gravbal/sweep.hpp"

namespace {

using namespace gravbal;
using std::numbers::pi;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "[x] ") + what;
  }
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double rel(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

ExoModel shooting_model() {
  ExoModel m;
  m.arch = derive_architecture(0.30);
  m.masses = {4.6, 1.0, 0.0, 0.0, 0.0, 0.0};
  m.g = 9.81;
  return m;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Outcome criterion_1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const ExoModel base = shooting_model();
  const BalanceSolution sol = solve_spring_constants(base.masses, base.arch, base.g);
  ExoModel m = base;
  m.springs = sol.springs;
  const double v = predicted_constant_energy(m);
  const double ms = elapsed_ms(start);
  o.require(rel(sol.springs.k1, 1092.59) < 1e-4, "k1 = " + num(sol.springs.k1, 9) + " N/m");
  o.require(rel(sol.springs.k2, 16.817) < 1e-4, "k2 = " + num(sol.springs.k2, 9) + " N/m");
  o.require(rel(v, 13.476) < 1e-4, "V = " + num(v, 9) + " J");
  o.require(ms < 100.0, "runtime " + num(ms, 3) + " ms");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto grid = sweep_grid(balanced(shooting_model()), 101, 101);
  double lo = grid.front().v_total, hi = lo, sum = 0.0;
  for (const GridSample& s : grid) {
    lo = std::min(lo, s.v_total);
    hi = std::max(hi, s.v_total);
    sum += s.v_total;
  }
  const double ms = elapsed_ms(start);
  const double spread = (hi - lo) / (sum / grid.size());
  o.require(grid.size() == 101u * 101u, std::to_string(grid.size()) + " samples");
  o.require(spread < 1e-9, "relative spread " + num(spread, 3) + " < 1e-9");
  o.require(ms < 1000.0, "runtime " + num(ms, 3) + " ms");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const ExoModel m = balanced(shooting_model());
  const auto traj = shooting_trajectory(m, 201);
  double g_lo = 1e300, g_hi = -1e300, s_lo = 1e300, s_hi = -1e300, t_lo = 1e300, t_hi = -1e300;
  for (const TrajectoryPoint& p : traj) {
    g_lo = std::min(g_lo, p.energies.v_g);
    g_hi = std::max(g_hi, p.energies.v_g);
    s_lo = std::min(s_lo, p.energies.v_s);
    s_hi = std::max(s_hi, p.energies.v_s);
    t_lo = std::min(t_lo, p.energies.v_total);
    t_hi = std::max(t_hi, p.energies.v_total);
  }
  const double v = predicted_constant_energy(m);
  o.require(g_hi - g_lo > 1.0, "v_g varies by " + num(g_hi - g_lo) + " J");
  o.require(s_hi - s_lo > 1.0, "v_s varies by " + num(s_hi - s_lo) + " J");
  const double dev = std::max(rel(t_lo, v), rel(t_hi, v));
  o.require(dev < 1e-9, "v_total within " + num(dev, 3) + " of constant");
  return o;
}

struct LineFit {
  double slope = 0.0;
  double max_residual = 0.0;
};

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit f;
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - f.slope * sx) / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.max_residual = std::max(f.max_residual, std::abs(intercept + f.slope * x[i] - y[i]));
  }
  return f;
}

Outcome criterion_4() {
  Outcome o;
  const ExoModel m = shooting_model();
  const ArchParams& a = m.arch;
  double worst_resid = 0.0, worst_slope = 0.0;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto rows = mass_study(m.masses, a, m.g, {0.0, 10.0, 11, f});
    std::vector<double> x, k1, k2;
    double scale1 = 0.0, scale2 = 0.0;
    for (const MassStudyRow& r : rows) {
      x.push_back(r.added_arm_mass);
      k1.push_back(r.k1);
      k2.push_back(r.k2);
      scale1 = std::max(scale1, std::abs(r.k1));
      scale2 = std::max(scale2, std::abs(r.k2));
    }
    const LineFit l1 = least_squares_line(x, k1);
    const LineFit l2 = least_squares_line(x, k2);
    worst_resid = std::max({worst_resid, l1.max_residual / scale1, l2.max_residual / scale2});

    const double slope1 = 81.0 * m.g / (8.0 * a.l1) * (f / 2.0 + (1.0 - f));
    const double slope2 = m.g * (1.0 - f) * a.l2 / (2.0 * a.l5 * a.ls);
    worst_slope = std::max(worst_slope, rel(l1.slope, slope1));
    // A zero predicted slope (all arm mass on link 1) is compared against k2's scale.
    worst_slope = std::max(worst_slope, slope2 == 0.0 ? std::abs(l2.slope) / scale2
                                                      : rel(l2.slope, slope2));
  }
  o.require(worst_resid < 1e-9, "line residual " + num(worst_resid, 3) + " < 1e-9");
  o.require(worst_slope < 1e-9, "slope error " + num(worst_slope, 3) + " < 1e-9");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const ExoModel m = balanced(shooting_model());
  double worst = 0.0;
  for (std::size_t i = 0; i < 101; ++i) {
    for (std::size_t j = 0; j < 101; ++j) {
      const Configuration q{uniform_node(kShoulderMin, kShoulderMax, i, 101),
                            uniform_node(kElbowMin, kElbowMax, j, 101)};
      const GeneralizedTorque t = gravity_torque(m, q, 1e-5);
      worst = std::max({worst, std::abs(t.dq1), std::abs(t.dq2)});
    }
  }
  o.require(worst < 1e-5, "max |dV/dq| on grid " + num(worst, 3) + " < 1e-5 J/rad");

  const GeneralizedTorque free = gravity_torque(shooting_model(), {0.0, 0.0}, 1e-5);
  o.require(rel(free.dq1, 9.712) < 1e-3,
            "spring-free dV/dq1(0,0) = " + num(free.dq1, 7) + " vs stated 9.712 J/rad");
  // The exact derivative includes the forearm term g m2 l2/2 cos(q1+q2).
  const double analytic = 9.81 * 0.30 * (4.6 / 2 + 1.0) + 9.81 * 1.0 * 0.27 / 2;
  o.require(rel(free.dq1, analytic) < 1e-3,
            "matches analytic derivative " + num(analytic, 7) + " J/rad");
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::vector<EnergySample> gravity_only, total;
  const ExoModel unbalanced = shooting_model();
  const ExoModel m = balanced(unbalanced);
  for (std::size_t i = 0; i < 101; ++i) {
    for (std::size_t j = 0; j < 101; ++j) {
      const Configuration q{uniform_node(kShoulderMin, kShoulderMax, i, 101),
                            uniform_node(kElbowMin, kElbowMax, j, 101)};
      gravity_only.push_back({q, gravitational_pe(unbalanced, q)});
      total.push_back({q, total_pe(m, q).v_total});
    }
  }
  const GravityCoefficients lhs = gravity_coefficients(unbalanced.masses, unbalanced.arch,
                                                       unbalanced.g);
  const BasisFit fg = fit_energy_basis(gravity_only);
  o.require(std::abs(fg.c1 - lhs.shoulder) < 1e-9 && std::abs(lhs.shoulder - 9.7119) < 1e-9,
            "V_G c1 = " + num(fg.c1, 10) + " J");
  o.require(std::abs(fg.c12 - lhs.elbow) < 1e-9 && std::abs(lhs.elbow - 1.32435) < 1e-9,
            "V_G c12 = " + num(fg.c12, 10) + " J");

  const BasisFit fb = fit_energy_basis(total);
  o.require(std::abs(fb.c1) < 1e-9 && std::abs(fb.c12) < 1e-9,
            "balanced c1 = " + num(fb.c1, 3) + ", c12 = " + num(fb.c12, 3));
  o.require(rel(fb.c0, predicted_constant_energy(m)) < 1e-9,
            "balanced c0 = " + num(fb.c0, 10) + " J");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::mt19937_64 gen(20261015);
  auto u = [&](double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(gen); };
  auto masses = [&] { return MassSet{u(0, 10), u(0, 5), u(0, 2), u(0, 2), u(0, 2), u(0, 2)}; };
  auto rel1 = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };

  double homog = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ArchParams arch = derive_architecture(u(0.05, 2.0));
    const MassSet ms = masses();
    const double g = u(1, 20), alpha = u(0.01, 50), beta = u(0.01, 5);
    const SpringPair k = solve_spring_constants(ms, arch, g).springs;
    const SpringPair ka = solve_spring_constants(ms.scaled(alpha), arch, g).springs;
    const SpringPair kb = solve_spring_constants(ms, arch, beta * g).springs;
    homog = std::max({homog, rel1(ka.k1, alpha * k.k1), rel1(ka.k2, alpha * k.k2),
                      rel1(kb.k1, beta * k.k1), rel1(kb.k2, beta * k.k2)});
  }
  o.require(homog < 1e-9, "solver homogeneity " + num(homog, 3));

  double scale = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double l1 = u(0.01, 3), alpha = u(0.05, 20);
    const ArchParams a = derive_architecture(l1), b = derive_architecture(alpha * l1);
    for (auto f : {&ArchParams::l1, &ArchParams::l2, &ArchParams::l3, &ArchParams::l4,
                   &ArchParams::l5, &ArchParams::l6, &ArchParams::b1, &ArchParams::b2,
                   &ArchParams::ls, &ArchParams::lt}) {
      scale = std::max(scale, rel(b.*f, alpha * (a.*f)));
    }
  }
  o.require(scale < 1e-9, "architecture scale-equivariance " + num(scale, 3));

  double decomposition = 0.0, periodic = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ExoModel m;
    m.arch = derive_architecture(u(0.05, 2.0));
    m.masses = masses();
    m.springs = {u(0, 5000), u(0, 500)};
    m.g = u(1, 20);
    const Configuration q{u(-2 * pi, 2 * pi), u(-2 * pi, 2 * pi)};
    const SpringLengths s = spring_lengths(m, q);
    decomposition = std::max(
        decomposition, rel1(0.5 * m.springs.k1 * s.s1 * s.s1 + 0.5 * m.springs.k2 * s.s2 * s.s2,
                            elastic_pe(m, q)));
    const EnergyBreakdown e = total_pe(m, q);
    for (const Configuration shifted : {Configuration{q.q1 + 2 * pi, q.q2},
                                        Configuration{q.q1, q.q2 + 2 * pi}}) {
      const EnergyBreakdown f = total_pe(m, shifted);
      periodic = std::max({periodic, rel1(f.v_g, e.v_g), rel1(f.v_s, e.v_s),
                           rel1(f.v_total, e.v_total)});
    }
  }
  o.require(decomposition < 1e-9, "spring decomposition " + num(decomposition, 3));
  o.require(periodic < 1e-9, "2pi periodicity " + num(periodic, 3));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion_8() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "gravbal_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "shooting.json";
  std::ofstream(cfg) << R"({"l1": 0.30, "m1": 4.6, "m2": 1, "g": 9.81,
    "grid_n1": 11, "grid_n2": 11, "traj_n": 21,
    "study_min": 0, "study_max": 3.6, "study_n": 5, "upper_fraction": 0.5})";
  const fs::path unbalanced = dir / "unbalanced.json";
  std::ofstream(unbalanced) << R"({"l1": 0.30, "m1": 4.6, "m2": 1, "k1": 0})";

  auto run = [&](const std::string& cmd, const fs::path& config, const fs::path& out) {
    std::ostringstream sink_out, sink_err;
    return run_cli({"gravbal", cmd, "--config", config.string(), "--out", out.string()},
                   sink_out, sink_err);
  };

  o.require(run("solve", cfg, dir / "a") == kExitOk, "solve exit 0");
  o.require(run("check", cfg, dir / "a") == kExitOk, "check(balanced) exit 0");
  o.require(run("check", unbalanced, dir / "a") == kExitUnbalanced, "check(k1=0) exit 1");

  const struct {
    const char* cmd;
    const char* file;
    long rows;
  } datasets[] = {{"sweep", "grid.csv", 121}, {"trajectory", "trajectory.csv", 21},
                  {"study", "study.csv", 5}};
  for (const auto& d : datasets) {
    const bool ok = run(d.cmd, cfg, dir / "a") == kExitOk && run(d.cmd, cfg, dir / "b") == kExitOk;
    const std::string first = slurp(dir / "a" / d.file);
    const std::string second = slurp(dir / "b" / d.file);
    const long lines = std::count(first.begin(), first.end(), '\n');
    o.require(ok && !first.empty() && first == second && lines == d.rows + 1,
              std::string(d.cmd) + " " + std::to_string(lines - 1) + " rows byte-identical");
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 shooting-study spring constants and constant energy", criterion_1},
      {"2 energy surface flatness on 101x101 grid", criterion_2},
      {"3 gravity/spring trade-off along shooting trajectory", criterion_3},
      {"4 stiffness linear in added arm mass", criterion_4},
      {"5 finite-difference torque oracle", criterion_5},
      {"6 sine-basis coefficient fit", criterion_6},
      {"7 property suite", criterion_7},
      {"8 CLI determinism and exit codes", criterion_8},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " :: " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
