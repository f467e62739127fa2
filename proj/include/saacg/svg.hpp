#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "saacg/bounds.hpp"
#include "saacg/common.hpp"
#include "saacg/mesh.hpp"

namespace saacg {

namespace detail {

/// Blue-white-red diverging colormap on [-1, 1].
inline std::string diverging_color(double t) {
  t = std::clamp(t, -1.0, 1.0);
  int r, g, b;
  if (t < 0) {
    const double s = 1.0 + t;  // 0 at -1, 1 at 0
    r = static_cast<int>(255 * s);
    g = static_cast<int>(255 * s);
    b = 255;
  } else {
    const double s = 1.0 - t;
    r = 255;
    g = static_cast<int>(255 * s);
    b = static_cast<int>(255 * s);
  }
  std::ostringstream os;
  os << "rgb(" << r << "," << g << "," << b << ")";
  return os.str();
}

inline std::string fmt_num(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

}  // namespace detail

/// Renders a per-cell control field as a colored triangle heatmap.
inline void save_control_heatmap_svg(const Mesh& mesh, const ControlField& u,
                                     const std::string& path,
                                     double scale_min, double scale_max) {
  require(u.values.size() == mesh.cell_count(), "heatmap: size mismatch");
  const int W = 540, plot = 480, margin = 30;
  std::ofstream out(path);
  if (!out) throw Error("heatmap: cannot open " + path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
      << W << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  const double half = 0.5 * (scale_max - scale_min);
  const double mid = 0.5 * (scale_max + scale_min);
  for (int t = 0; t < mesh.cell_count(); ++t) {
    const auto& cl = mesh.cells[t];
    out << "<polygon points='";
    for (int i = 0; i < 3; ++i) {
      const auto& p = mesh.nodes[cl[i]];
      const double x = margin + p.x() * plot;
      const double y = margin + (1.0 - p.y()) * plot;
      out << x << "," << y << (i < 2 ? " " : "");
    }
    const double tval = half > 0 ? (u.values[t] - mid) / half : 0.0;
    out << "' fill='" << detail::diverging_color(tval) << "' stroke='none'/>\n";
  }
  out << "<rect x='" << margin << "' y='" << margin << "' width='" << plot
      << "' height='" << plot << "' fill='none' stroke='black'/>\n"
      << "<text x='" << margin << "' y='" << W - 8 << "' font-size='12'>range ["
      << detail::fmt_num(scale_min) << ", " << detail::fmt_num(scale_max)
      << "]</text>\n</svg>\n";
}

/// Log-log scatter of (N, value) with the fitted power-law line annotated.
inline void save_loglog_svg(const std::vector<std::pair<double, double>>& points,
                            const RateFit& fit, const std::string& metric,
                            const std::string& path) {
  require(!points.empty(), "loglog plot: no points");
  const int W = 560, H = 420, ml = 70, mr = 20, mt = 30, mb = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& [N, v] : points) {
    require(N > 0 && v > 0, "loglog plot: positive data required");
    xmin = std::min(xmin, std::log10(N));
    xmax = std::max(xmax, std::log10(N));
    ymin = std::min(ymin, std::log10(v));
    ymax = std::max(ymax, std::log10(v));
  }
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;
  auto px = [&](double lx) {
    return ml + (lx - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double ly) {
    return H - mb - (ly - ymin) / (ymax - ymin) * (H - mt - mb);
  };
  std::ofstream out(path);
  if (!out) throw Error("loglog plot: cannot open " + path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
      << H << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
      << "<rect x='" << ml << "' y='" << mt << "' width='" << W - ml - mr
      << "' height='" << H - mt - mb << "' fill='none' stroke='black'/>\n";
  // fitted line: log10(v) = (intercept + slope*ln N)/ln 10
  const double ln10 = std::log(10.0);
  auto fit_ly = [&](double lx) {
    return (fit.intercept + fit.slope * lx * ln10) / ln10;
  };
  out << "<line x1='" << px(xmin) << "' y1='" << py(fit_ly(xmin)) << "' x2='"
      << px(xmax) << "' y2='" << py(fit_ly(xmax))
      << "' stroke='red' stroke-width='1.5'/>\n";
  for (const auto& [N, v] : points)
    out << "<circle cx='" << px(std::log10(N)) << "' cy='" << py(std::log10(v))
        << "' r='4' fill='blue'/>\n";
  out << "<text x='" << ml << "' y='" << mt - 10 << "' font-size='13'>" << metric
      << ": slope " << detail::fmt_num(fit.slope) << " (r2 "
      << detail::fmt_num(fit.r_squared) << ")</text>\n"
      << "<text x='" << (W - ml - mr) / 2 + ml << "' y='" << H - 12
      << "' font-size='12' text-anchor='middle'>log10 N</text>\n";
  // axis tick labels at the corners
  out << "<text x='" << ml << "' y='" << H - mb + 16 << "' font-size='10'>"
      << detail::fmt_num(xmin) << "</text>\n"
      << "<text x='" << W - mr << "' y='" << H - mb + 16
      << "' font-size='10' text-anchor='end'>" << detail::fmt_num(xmax)
      << "</text>\n"
      << "<text x='" << ml - 5 << "' y='" << H - mb
      << "' font-size='10' text-anchor='end'>" << detail::fmt_num(ymin)
      << "</text>\n"
      << "<text x='" << ml - 5 << "' y='" << mt + 10
      << "' font-size='10' text-anchor='end'>" << detail::fmt_num(ymax)
      << "</text>\n</svg>\n";
}

}  // namespace saacg
