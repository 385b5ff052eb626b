#include "taptest/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "taptest/errors.hpp"

namespace taptest {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

kernels::Grid plot_grid(const RegionModel& region, std::span<const PlotSeries> series, const PlotOptions& options) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  const auto extend = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (Eigen::Index r = 0; r < region.centroids.rows(); ++r) extend(region.centroids(r, 0), region.centroids(r, 1));
  for (const auto& s : series)
    for (Eigen::Index r = 0; r < s.points.scores.rows(); ++r) extend(s.points.scores(r, 0), s.points.scores(r, 1));

  if (x1 - x0 <= 0.0) { x0 -= 1.0; x1 += 1.0; }
  if (y1 - y0 <= 0.0) { y0 -= 1.0; y1 += 1.0; }
  const double px = options.padding * (x1 - x0);
  const double py = options.padding * (y1 - y0);
  kernels::Grid g;
  g.x_min = x0 - px;
  g.x_max = x1 + px;
  g.y_min = y0 - py;
  g.y_max = y1 + py;
  g.nx = g.ny = options.grid_cells;
  return g;
}

std::vector<int> rasterize_regions(const RegionModel& region, const kernels::Grid& grid) {
  return kernels::parallel::nearest_on_grid(region.centroids, grid);
}

std::vector<std::array<double, 4>> region_boundaries(const std::vector<int>& cells, const kernels::Grid& grid) {
  const double dx = (grid.x_max - grid.x_min) / static_cast<double>(grid.nx);
  const double dy = (grid.y_max - grid.y_min) / static_cast<double>(grid.ny);
  std::vector<std::array<double, 4>> out;
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const int here = cells[j * grid.nx + i];
      const double xl = grid.x_min + static_cast<double>(i) * dx;
      const double yl = grid.y_min + static_cast<double>(j) * dy;
      if (i + 1 < grid.nx && cells[j * grid.nx + i + 1] != here) out.push_back({xl + dx, yl, xl + dx, yl + dy});
      if (j + 1 < grid.ny && cells[(j + 1) * grid.nx + i] != here) out.push_back({xl, yl + dy, xl + dx, yl + dy});
    }
  }
  return out;
}

std::string render_scatter_svg(const RegionModel& region, std::span<const PlotSeries> series,
                               const PlotOptions& options) {
  if (region.c() != 2) throw DataError("plots need 2D regions; model has c = " + std::to_string(region.c()));
  std::size_t total_points = 0;
  for (const auto& s : series) {
    if (s.points.component_count() != 2) {
      throw DataError("score series '" + s.name + "' has " + std::to_string(s.points.component_count()) +
                      " components; plots need exactly 2");
    }
    total_points += s.points.rows();
  }
  if (total_points == 0) throw DataError("no score points to plot");

  const kernels::Grid grid = plot_grid(region, series, options);
  const auto cells = rasterize_regions(region, grid);
  const auto borders = region_boundaries(cells, grid);

  const double left = 70, right = 170, top = 40, bottom = 60;
  const double pw = options.width - left - right;
  const double ph = options.height - top - bottom;
  const auto sx = [&](double x) { return left + (x - grid.x_min) / (grid.x_max - grid.x_min) * pw; };
  const auto sy = [&](double y) { return top + ph - (y - grid.y_min) / (grid.y_max - grid.y_min) * ph; };

  // Colours: region labels first (sorted), then any other labels seen.
  std::map<std::string, std::string> colour;
  std::set<std::string> names(region.cluster_to_label.begin(), region.cluster_to_label.end());
  for (const auto& s : series) names.insert(s.points.labels.begin(), s.points.labels.end());
  std::size_t next = 0;
  for (const auto& l : std::set<std::string>(region.cluster_to_label.begin(), region.cluster_to_label.end())) {
    colour[l] = kPalette[next++ % std::size(kPalette)];
  }
  for (const auto& l : names) {
    if (!colour.count(l)) colour[l] = kPalette[next++ % std::size(kPalette)];
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
     << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"16\">" << escape(options.title) << "</text>\n";

  // Light region fill: one rect per run of equal cells along each grid row.
  os << "<g class=\"regions\" opacity=\"0.12\">\n";
  const double cw = pw / static_cast<double>(grid.nx);
  const double chh = ph / static_cast<double>(grid.ny);
  for (std::size_t j = 0; j < grid.ny; ++j) {
    std::size_t i = 0;
    while (i < grid.nx) {
      const int owner = cells[j * grid.nx + i];
      std::size_t end = i + 1;
      while (end < grid.nx && cells[j * grid.nx + end] == owner) ++end;
      os << "<rect x=\"" << fmt(left + static_cast<double>(i) * cw) << "\" y=\""
         << fmt(top + ph - static_cast<double>(j + 1) * chh) << "\" width=\"" << fmt(static_cast<double>(end - i) * cw)
         << "\" height=\"" << fmt(chh) << "\" fill=\""
         << colour[region.cluster_to_label[static_cast<std::size_t>(owner)]] << "\"/>\n";
      i = end;
    }
  }
  os << "</g>\n";

  os << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = grid.x_min + (grid.x_max - grid.x_min) * t / 4.0;
    const double fy = grid.y_min + (grid.y_max - grid.y_min) * t / 4.0;
    os << "<text x=\"" << fmt(sx(fx)) << "\" y=\"" << fmt(top + ph + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick(fx) << "</text>\n";
    os << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(sy(fy) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick(fy) << "</text>\n";
  }
  os << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"" << fmt(options.height - 18)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">PC1</text>\n";
  os << "<text x=\"18\" y=\"" << fmt(top + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"13\" transform=\"rotate(-90 18 " << fmt(top + ph / 2) << ")\">PC2</text>\n";

  os << "<path class=\"region-boundary\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.2\" d=\"";
  for (const auto& b : borders) {
    os << 'M' << fmt(sx(b[0])) << ',' << fmt(sy(b[1])) << 'L' << fmt(sx(b[2])) << ',' << fmt(sy(b[3]));
  }
  os << "\"/>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    os << "<g class=\"series\" data-name=\"" << escape(s.name) << "\">\n";
    for (Eigen::Index r = 0; r < s.points.scores.rows(); ++r) {
      const std::string fill =
          s.points.labels.empty() ? "#333" : colour[s.points.labels[static_cast<std::size_t>(r)]];
      const double x = sx(s.points.scores(r, 0));
      const double y = sy(s.points.scores(r, 1));
      if (si % 2 == 0) {
        os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
      } else {
        os << "<rect x=\"" << fmt(x - 3.5) << "\" y=\"" << fmt(y - 3.5)
           << "\" width=\"7\" height=\"7\" fill=\"none\" stroke=\"" << fill << "\" stroke-width=\"1.5\"/>\n";
      }
    }
    os << "</g>\n";
  }

  for (std::size_t c = 0; c < region.k(); ++c) {
    const double x = sx(region.centroids(static_cast<Eigen::Index>(c), 0));
    const double y = sy(region.centroids(static_cast<Eigen::Index>(c), 1));
    os << "<path class=\"centroid\" d=\"M" << fmt(x - 6) << ',' << fmt(y - 6) << 'L' << fmt(x + 6) << ','
       << fmt(y + 6) << 'M' << fmt(x - 6) << ',' << fmt(y + 6) << 'L' << fmt(x + 6) << ',' << fmt(y - 6)
       << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
  }

  double ly = top + 10;
  const double lx = left + pw + 20;
  for (const auto& [label, col] : colour) {
    os << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(ly) << "\" r=\"4\" fill=\"" << col << "\"/>\n";
    os << "<text x=\"" << fmt(lx + 10) << "\" y=\"" << fmt(ly + 4) << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << escape(label) << "</text>\n";
    ly += 18;
  }
  for (std::size_t si = 0; si < series.size(); ++si) {
    if (si % 2 == 0) {
      os << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(ly) << "\" r=\"4\" fill=\"#555\"/>\n";
    } else {
      os << "<rect x=\"" << fmt(lx - 4) << "\" y=\"" << fmt(ly - 4)
         << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"#555\"/>\n";
    }
    os << "<text x=\"" << fmt(lx + 10) << "\" y=\"" << fmt(ly + 4) << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << escape(series[si].name) << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace taptest
