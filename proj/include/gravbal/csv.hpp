#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include "gravbal/sweep.hpp"

namespace gravbal {

class FileError : public std::runtime_error {
 public:
  FileError(std::filesystem::path path, const std::string& message)
      : std::runtime_error(message + ": " + path.string()), path_(std::move(path)) {}

  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

// Comma-separated, '.' decimal, '\n' row terminators, header first.
//   grid:       q1,q2,v_g,v_s,v_total
//   trajectory: t,q1,q2,v_g,v_s,v_total,dV_dq1,dV_dq2
//   study:      arm_mass,m1_eff,m2_eff,k1,k2,constant_V
[[nodiscard]] std::string to_csv(std::span<const GridSample> grid);
[[nodiscard]] std::string to_csv(std::span<const TrajectoryPoint> trajectory);
[[nodiscard]] std::string to_csv(std::span<const MassStudyRow> study);

/// Writes text to path verbatim. Throws FileError on any I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

void write_csv(std::span<const GridSample> grid, const std::filesystem::path& path);
void write_csv(std::span<const TrajectoryPoint> trajectory,
               const std::filesystem::path& path);
void write_csv(std::span<const MassStudyRow> study, const std::filesystem::path& path);

}  // namespace gravbal
