#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference and an
// OpenMP version. Both evaluate every output element with the same arithmetic
// in the same order, so their results are bit-identical; the test suite holds
// them to that and bench/ compares their speed.

#include <cstddef>
#include <span>
#include <vector>

#include "taptest/tap_table.hpp"

namespace taptest::kernels {

struct WindowPeak {
  std::size_t index = 0;    // sample index of the first maximum of |x|
  double magnitude = 0.0;   // |x[index]|
};

/// Axis-aligned grid of cell centres over a rectangle, row-major with y
/// varying slowest.
struct Grid {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  std::size_t nx = 200, ny = 200;

  double cell_x(std::size_t i) const {
    return x_min + (static_cast<double>(i) + 0.5) * (x_max - x_min) / static_cast<double>(nx);
  }
  double cell_y(std::size_t j) const {
    return y_min + (static_cast<double>(j) + 0.5) * (y_max - y_min) / static_cast<double>(ny);
  }
};

namespace serial {

// out(i, j) = sum_v (x(i, v) - mean(v)) * basis(v, j) for j < basis.cols()
void project_rows(const Matrix& x, const Vector& mean, const Matrix& basis, Matrix& out);

// Nearest centroid by squared Euclidean distance; ties go to the lower index.
void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> assignment,
                    std::span<double> sq_distance);

// One entry per consecutive window of `window` samples (last may be partial).
std::vector<WindowPeak> window_peaks(std::span<const double> x, std::size_t window);

// Nearest-centroid index for every cell centre of `grid` (2D centroids).
std::vector<int> nearest_on_grid(const Matrix& centroids, const Grid& grid);

}  // namespace serial

namespace parallel {

void project_rows(const Matrix& x, const Vector& mean, const Matrix& basis, Matrix& out);
void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> assignment,
                    std::span<double> sq_distance);
std::vector<WindowPeak> window_peaks(std::span<const double> x, std::size_t window);
std::vector<int> nearest_on_grid(const Matrix& centroids, const Grid& grid);

}  // namespace parallel

}  // namespace taptest::kernels
