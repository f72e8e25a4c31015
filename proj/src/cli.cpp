#include "gravbal/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "gravbal/balance.hpp"
#include "gravbal/config.hpp"
#include "gravbal/csv.hpp"
#include "gravbal/energy.hpp"
#include "gravbal/plot.hpp"
#include "gravbal/sweep.hpp"

namespace gravbal {

namespace {

namespace fs = std::filesystem;

constexpr int kConsoleDigits = 8;

fs::path prepare_out_dir(const RunConfig& config) {
  const fs::path dir = config.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw FileError(dir, "cannot create output directory");
  return dir;
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
  const ArchParams arch = derive_architecture(config.l1);
  const BalanceSolution sol = solve_spring_constants(config.masses, arch, config.g);
  ExoModel model = build_model(config);
  model.springs = sol.springs;
  out << "k1 = " << sol.springs.k1 << " N/m\n"
      << "k2 = " << sol.springs.k2 << " N/m\n"
      << "V = " << predicted_constant_energy(model) << " J\n"
      << "residual1 = " << sol.residual1 << " J\n"
      << "residual2 = " << sol.residual2 << " J\n";
  return kExitOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const ExoModel model = build_model(config);
  const BalanceReport r = check_balance(model, config.grid_n1);
  out << "k1 = " << model.springs.k1 << " N/m\n"
      << "k2 = " << model.springs.k2 << " N/m\n"
      << "grid = " << r.grid_n << " x " << r.grid_n << "\n"
      << "V min = " << r.min << " J\n"
      << "V max = " << r.max << " J\n"
      << "V mean = " << r.mean << " J\n"
      << "relative spread = " << r.relative_spread << "\n"
      << "fit c0 = " << r.fit.c0 << " J\n"
      << "fit c1 (sin q1) = " << r.fit.c1 << " J\n"
      << "fit c12 (sin(q1+q2)) = " << r.fit.c12 << " J\n"
      << "fit max residual = " << r.fit.max_fit_residual << " J\n"
      << "max torque norm = " << r.max_torque_norm << " J/rad\n"
      << "verdict: " << (r.balanced ? "balanced" : "unbalanced") << "\n";
  return r.balanced ? kExitOk : kExitUnbalanced;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const ExoModel model = build_model(config);
  const auto grid = sweep_grid(model, config.grid_n1, config.grid_n2);
  const fs::path dir = prepare_out_dir(config);
  write_csv(grid, dir / "grid.csv");
  render_plot(grid, dir / "grid.svg");

  double lo = grid.front().v_total;
  double hi = lo;
  for (const GridSample& s : grid) {
    lo = std::min(lo, s.v_total);
    hi = std::max(hi, s.v_total);
  }
  out << "wrote " << grid.size() << " samples to " << (dir / "grid.csv").string() << "\n"
      << "V_total range = [" << lo << ", " << hi << "] J\n";
  return kExitOk;
}

int cmd_trajectory(const RunConfig& config, std::ostream& out) {
  const ExoModel model = build_model(config);
  const auto traj = shooting_trajectory(model, config.traj_n);
  const fs::path dir = prepare_out_dir(config);
  write_csv(traj, dir / "trajectory.csv");
  render_plot(traj, dir / "trajectory.svg");

  double lo = traj.front().energies.v_total;
  double hi = lo;
  double torque = 0.0;
  for (const TrajectoryPoint& p : traj) {
    lo = std::min(lo, p.energies.v_total);
    hi = std::max(hi, p.energies.v_total);
    torque = std::max(torque, p.torque.norm());
  }
  out << "wrote " << traj.size() << " points to " << (dir / "trajectory.csv").string()
      << "\n"
      << "V_total range = [" << lo << ", " << hi << "] J\n"
      << "max torque norm = " << torque << " J/rad\n";
  return kExitOk;
}

int cmd_study(const RunConfig& config, std::ostream& out) {
  const ArchParams arch = derive_architecture(config.l1);
  const auto rows = mass_study(
      config.masses, arch, config.g,
      {config.study_min, config.study_max, config.study_n, config.upper_fraction});
  const fs::path dir = prepare_out_dir(config);
  write_csv(rows, dir / "study.csv");
  render_plot(rows, dir / "study.svg");
  out << "wrote " << rows.size() << " rows to " << (dir / "study.csv").string() << "\n"
      << "k1 from " << rows.front().k1 << " to " << rows.back().k1 << " N/m\n"
      << "k2 from " << rows.front().k2 << " to " << rows.back().k2 << " N/m\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gravity-balanced arm exoskeleton: spring design and balance checks"};
  app.name(args.empty() ? "gravbal" : args.front());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"solve", "Solve the balancing spring stiffnesses", cmd_solve},
      {"check", "Verify constant total energy over the shooting range", cmd_check},
      {"sweep", "Write the energy grid (grid.csv, grid.svg)", cmd_sweep},
      {"trajectory", "Write the shooting-motion energies (trajectory.csv, .svg)",
       cmd_trajectory},
      {"study", "Write spring stiffness vs. added arm mass (study.csv, .svg)", cmd_study},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "Run configuration (JSON)")->required();
    sub->add_option("--out", out_dir, "Output directory, overrides out_dir");
    subs.push_back(sub);
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("gravbal");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config = load_config(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;
    out << std::setprecision(kConsoleDigits);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].run(config, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace gravbal
