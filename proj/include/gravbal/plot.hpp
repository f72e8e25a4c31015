#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "gravbal/sweep.hpp"

namespace gravbal {

// Static SVG renderings of the three datasets. Each throws
// std::domain_error on an empty dataset.

/// Heatmap of v_total over (q1, q2) with a colour bar and min/max annotation.
/// A field whose spread is below the balance threshold is drawn in one colour.
[[nodiscard]] std::string render_svg(std::span<const GridSample> grid);

/// v_g, v_s and v_total against motion phase t.
[[nodiscard]] std::string render_svg(std::span<const TrajectoryPoint> trajectory);

/// k1 and k2 against added arm mass, one panel each.
[[nodiscard]] std::string render_svg(std::span<const MassStudyRow> study);

void render_plot(std::span<const GridSample> grid, const std::filesystem::path& path);
void render_plot(std::span<const TrajectoryPoint> trajectory,
                 const std::filesystem::path& path);
void render_plot(std::span<const MassStudyRow> study, const std::filesystem::path& path);

}  // namespace gravbal
