#include "gravbal/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gravbal/balance.hpp"
#include "gravbal/csv.hpp"

namespace gravbal {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 500.0;

std::string fixed(double v, int decimals = 2) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
  return buf.data();
}

std::string sig(double v, int digits = 6) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, v);
  return buf.data();
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

// Widens a degenerate or flat range so a constant series still gets an axis.
Range padded(double lo, double hi) {
  double span = hi - lo;
  if (!(span > 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi))))) {
    const double mid = 0.5 * (lo + hi);
    const double half = std::max(1.0, 0.05 * std::abs(mid));
    return {mid - half, mid + half};
  }
  return {lo - 0.05 * span, hi + 0.05 * span};
}

std::vector<double> nice_ticks(Range r, int target = 5) {
  const double raw = (r.hi - r.lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-12 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

struct Panel {
  double left, top, width, height;
  Range x, y;

  [[nodiscard]] double px(double v) const {
    return left + (v - x.lo) / (x.hi - x.lo) * width;
  }
  [[nodiscard]] double py(double v) const {
    return top + height - (v - y.lo) / (y.hi - y.lo) * height;
  }
};

class Svg {
 public:
  Svg() {
    body_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) +
             "\" height=\"" + fixed(kHeight, 0) + "\" viewBox=\"0 0 " +
             fixed(kWidth, 0) + " " + fixed(kHeight, 0) +
             "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& extra = "") {
    body_ += "<rect x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\" width=\"" + fixed(w) +
             "\" height=\"" + fixed(h) + "\" fill=\"" + fill + "\"" + extra + "/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke) {
    body_ += "<line x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) + "\" x2=\"" + fixed(x2) +
             "\" y2=\"" + fixed(y2) + "\" stroke=\"" + stroke + "\"/>\n";
  }

  void text(double x, double y, const std::string& s, const std::string& anchor = "middle",
            const std::string& extra = "") {
    body_ += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\" text-anchor=\"" +
             anchor + "\"" + extra + ">" + s + "</text>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                const std::string& extra = "") {
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"2\"" + extra +
             " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += ' ';
      body_ += fixed(pts[i].first) + "," + fixed(pts[i].second);
    }
    body_ += "\"/>\n";
  }

  void axes(const Panel& p, const std::string& xlabel, const std::string& ylabel) {
    rect(p.left, p.top, p.width, p.height, "none", " stroke=\"black\"");
    for (double t : nice_ticks(p.x)) {
      const double x = p.px(t);
      line(x, p.top + p.height, x, p.top + p.height + 5, "black");
      text(x, p.top + p.height + 18, sig(t, 4));
    }
    for (double t : nice_ticks(p.y)) {
      const double y = p.py(t);
      line(p.left - 5, y, p.left, y, "black");
      text(p.left - 8, y + 4, sig(t, 6), "end");
    }
    text(p.left + p.width / 2, p.top + p.height + 38, xlabel);
    const double yc = p.top + p.height / 2;
    text(p.left - 62, yc, ylabel, "middle",
         " transform=\"rotate(-90 " + fixed(p.left - 62) + " " + fixed(yc) + ")\"");
  }

  [[nodiscard]] std::string finish() {
    body_ += "</svg>\n";
    return std::move(body_);
  }

 private:
  std::string body_;
};

// Viridis-like ramp sampled at five stops.
std::string colour(double u) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  u = std::clamp(u, 0.0, 1.0) * (stops.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(u), stops.size() - 2);
  const double f = u - static_cast<double>(i);
  std::array<char, 8> buf{};
  const auto c = [&](int k) {
    return static_cast<int>(std::lround(stops[i][k] + f * (stops[i + 1][k] - stops[i][k])));
  };
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", c(0), c(1), c(2));
  return buf.data();
}

template <class T>
void require_nonempty(std::span<const T> data, const char* what) {
  if (data.empty()) {
    throw std::domain_error(std::string("render_plot: empty ") + what + " dataset");
  }
}

}  // namespace

std::string render_svg(std::span<const GridSample> grid) {
  require_nonempty(grid, "grid");

  std::vector<double> q1s, q2s;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  double sum = 0.0;
  for (const GridSample& s : grid) {
    q1s.push_back(s.q1);
    q2s.push_back(s.q2);
    vmin = std::min(vmin, s.v_total);
    vmax = std::max(vmax, s.v_total);
    sum += s.v_total;
  }
  const double mean = sum / static_cast<double>(grid.size());
  std::sort(q1s.begin(), q1s.end());
  q1s.erase(std::unique(q1s.begin(), q1s.end()), q1s.end());
  std::sort(q2s.begin(), q2s.end());
  q2s.erase(std::unique(q2s.begin(), q2s.end()), q2s.end());

  const double dx = q1s.size() > 1 ? (q1s.back() - q1s.front()) / (q1s.size() - 1) : 1.0;
  const double dy = q2s.size() > 1 ? (q2s.back() - q2s.front()) / (q2s.size() - 1) : 1.0;
  const Panel p{90, 50, 470, 380,
                {q1s.front() - dx / 2, q1s.back() + dx / 2},
                {q2s.front() - dy / 2, q2s.back() + dy / 2}};
  const bool uniform = (vmax - vmin) / std::max(1.0, std::abs(mean)) < kBalanceSpreadThreshold;

  Svg svg;
  svg.text(kWidth / 2, 28, "Total potential energy over the shooting range", "middle",
           " font-size=\"15\"");
  for (const GridSample& s : grid) {
    const double u = uniform ? 0.5 : (s.v_total - vmin) / (vmax - vmin);
    const double x0 = p.px(s.q1 - dx / 2);
    const double y0 = p.py(s.q2 + dy / 2);
    // Slight overlap hides anti-aliasing seams between cells.
    svg.rect(x0, y0, p.px(s.q1 + dx / 2) - x0 + 0.3, p.py(s.q2 - dy / 2) - y0 + 0.3,
             colour(u));
  }
  svg.axes(p, "q1 [rad]", "q2 [rad]");

  const double bar_left = p.left + p.width + 30;
  constexpr int kBarSteps = 64;
  for (int k = 0; k < kBarSteps; ++k) {
    const double u = uniform ? 0.5 : 1.0 - (k + 0.5) / kBarSteps;
    svg.rect(bar_left, p.top + k * p.height / kBarSteps, 20, p.height / kBarSteps + 0.3,
             colour(u));
  }
  svg.rect(bar_left, p.top, 20, p.height, "none", " stroke=\"black\"");
  svg.text(bar_left + 24, p.top + 4, "max " + sig(vmax, 12) + " J", "start");
  svg.text(bar_left + 24, p.top + p.height, "min " + sig(vmin, 12) + " J", "start");
  svg.text(bar_left + 10, p.top + p.height + 38, "V_total [J]");
  if (uniform) {
    svg.text(p.left + p.width / 2, p.top + p.height + 56,
             "uniform: relative spread " + sig((vmax - vmin) / std::max(1.0, std::abs(mean)), 3));
  }
  return svg.finish();
}

std::string render_svg(std::span<const TrajectoryPoint> trajectory) {
  require_nonempty(trajectory, "trajectory");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const TrajectoryPoint& tp : trajectory) {
    for (double v : {tp.energies.v_g, tp.energies.v_s, tp.energies.v_total}) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const Panel p{100, 50, 500, 380, {0.0, 1.0}, padded(lo, hi)};

  Svg svg;
  svg.text(kWidth / 2, 28, "Potential energy along the shooting motion", "middle",
           " font-size=\"15\"");
  svg.axes(p, "motion phase t [-]", "energy [J]");

  const struct {
    const char* label;
    const char* stroke;
    double EnergyBreakdown::*field;
  } series[] = {{"V_g (gravity)", "#1f77b4", &EnergyBreakdown::v_g},
                {"V_s (springs)", "#ff7f0e", &EnergyBreakdown::v_s},
                {"V_total", "#2ca02c", &EnergyBreakdown::v_total}};
  double legend_y = p.top + 10;
  for (const auto& s : series) {
    std::vector<std::pair<double, double>> pts;
    for (const TrajectoryPoint& tp : trajectory) {
      pts.emplace_back(p.px(tp.t), p.py(tp.energies.*s.field));
    }
    svg.polyline(pts, s.stroke);
    svg.line(p.left + p.width + 15, legend_y, p.left + p.width + 40, legend_y, s.stroke);
    svg.text(p.left + p.width + 45, legend_y + 4, s.label, "start");
    legend_y += 20;
  }
  return svg.finish();
}

std::string render_svg(std::span<const MassStudyRow> study) {
  require_nonempty(study, "study");

  Range x{study.front().added_arm_mass, study.back().added_arm_mass};
  if (!(x.hi > x.lo)) x = padded(x.lo, x.hi);

  Svg svg;
  svg.text(kWidth / 2, 24, "Balancing spring stiffness against added arm mass", "middle",
           " font-size=\"15\"");

  const struct {
    const char* label;
    const char* stroke;
    double MassStudyRow::*field;
    double top;
  } series[] = {{"k1 [N/m]", "#1f77b4", &MassStudyRow::k1, 45},
                {"k2 [N/m]", "#d62728", &MassStudyRow::k2, 265}};
  for (const auto& s : series) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const MassStudyRow& r : study) {
      lo = std::min(lo, r.*s.field);
      hi = std::max(hi, r.*s.field);
    }
    const Panel p{110, s.top, 560, 170, x, padded(lo, hi)};
    svg.axes(p, s.top > 100 ? "added arm mass [kg]" : "", s.label);
    std::vector<std::pair<double, double>> pts;
    for (const MassStudyRow& r : study) {
      pts.emplace_back(p.px(r.added_arm_mass), p.py(r.*s.field));
    }
    svg.polyline(pts, s.stroke);
  }
  return svg.finish();
}

void render_plot(std::span<const GridSample> grid, const std::filesystem::path& path) {
  write_text_file(path, render_svg(grid));
}

void render_plot(std::span<const TrajectoryPoint> trajectory,
                 const std::filesystem::path& path) {
  write_text_file(path, render_svg(trajectory));
}

void render_plot(std::span<const MassStudyRow> study, const std::filesystem::path& path) {
  write_text_file(path, render_svg(study));
}

}  // namespace gravbal
