#pragma once

// Static SVG scatter plots of 2D scores over the trained regions. Region
// borders come from a nearest-centroid rasterisation of the padded bounding
// box, so they are approximate to one grid cell.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "taptest/clustering.hpp"
#include "taptest/kernels.hpp"
#include "taptest/pca.hpp"

namespace taptest {

struct PlotSeries {
  std::string name;   // legend group, e.g. "training" or "testing"
  ScoreTable points;  // must have exactly 2 components
};

struct PlotOptions {
  std::string title = "Principal component scores";
  std::size_t grid_cells = 200;  // per axis
  double padding = 0.10;         // fraction of the data extent added on each side
  int width = 720;
  int height = 640;
};

/// Bounding box of every point and centroid, padded, split into
/// grid_cells x grid_cells cells.
kernels::Grid plot_grid(const RegionModel& region, std::span<const PlotSeries> series,
                        const PlotOptions& options = {});

/// Nearest-centroid index of every grid cell (row-major, y slowest).
std::vector<int> rasterize_regions(const RegionModel& region, const kernels::Grid& grid);

/// Border segments between grid cells owned by different centroids, as
/// (x0, y0, x1, y1) in score coordinates.
std::vector<std::array<double, 4>> region_boundaries(const std::vector<int>& cells, const kernels::Grid& grid);

/// Throws DataError when a series is not 2D or there is nothing to draw.
std::string render_scatter_svg(const RegionModel& region, std::span<const PlotSeries> series,
                               const PlotOptions& options = {});

}  // namespace taptest
