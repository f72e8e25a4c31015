#include "gravbal/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <initializer_list>

namespace gravbal {

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return {buf.data(), end};
}

std::string to_csv(std::span<const GridSample> grid) {
  std::string out = "q1,q2,v_g,v_s,v_total\n";
  for (const GridSample& s : grid) {
    append_row(out, {s.q1, s.q2, s.v_g, s.v_s, s.v_total});
  }
  return out;
}

std::string to_csv(std::span<const TrajectoryPoint> trajectory) {
  std::string out = "t,q1,q2,v_g,v_s,v_total,dV_dq1,dV_dq2\n";
  for (const TrajectoryPoint& p : trajectory) {
    append_row(out, {p.t, p.q.q1, p.q.q2, p.energies.v_g, p.energies.v_s,
                     p.energies.v_total, p.torque.dq1, p.torque.dq2});
  }
  return out;
}

std::string to_csv(std::span<const MassStudyRow> study) {
  std::string out = "arm_mass,m1_eff,m2_eff,k1,k2,constant_V\n";
  for (const MassStudyRow& r : study) {
    append_row(out, {r.added_arm_mass, r.m1_eff, r.m2_eff, r.k1, r.k2, r.constant_v});
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError(path, "cannot open file for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw FileError(path, "failed writing file");
}

void write_csv(std::span<const GridSample> grid, const std::filesystem::path& path) {
  write_text_file(path, to_csv(grid));
}

void write_csv(std::span<const TrajectoryPoint> trajectory,
               const std::filesystem::path& path) {
  write_text_file(path, to_csv(trajectory));
}

void write_csv(std::span<const MassStudyRow> study, const std::filesystem::path& path) {
  write_text_file(path, to_csv(study));
}

}  // namespace gravbal
