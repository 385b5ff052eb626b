#include "taptest/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace taptest::kernels {
namespace {

using Index = std::ptrdiff_t;

inline double project_one(const Matrix& x, const Vector& mean, const Matrix& basis, Index i,
                          Index j) {
  double acc = 0.0;
  for (Index v = 0; v < x.cols(); ++v) acc += (x(i, v) - mean(v)) * basis(v, j);
  return acc;
}

inline void nearest_one(const Matrix& points, const Matrix& centroids, Index i, int& best_index,
                        double& best_distance) {
  best_index = 0;
  best_distance = std::numeric_limits<double>::infinity();
  for (Index c = 0; c < centroids.rows(); ++c) {
    double d = 0.0;
    for (Index k = 0; k < points.cols(); ++k) {
      const double diff = points(i, k) - centroids(c, k);
      d += diff * diff;
    }
    if (d < best_distance) {
      best_distance = d;
      best_index = static_cast<int>(c);
    }
  }
}

inline WindowPeak peak_in(std::span<const double> x, std::size_t begin, std::size_t end) {
  WindowPeak p{begin, std::abs(x[begin])};
  for (std::size_t s = begin + 1; s < end; ++s) {
    const double a = std::abs(x[s]);
    if (a > p.magnitude) {
      p.magnitude = a;
      p.index = s;
    }
  }
  return p;
}

inline int nearest_cell(const Matrix& centroids, double px, double py) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Index c = 0; c < centroids.rows(); ++c) {
    const double dx = px - centroids(c, 0);
    const double dy = py - centroids(c, 1);
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

void check_projection(const Matrix& x, const Vector& mean, const Matrix& basis) {
  if (x.cols() != mean.size() || basis.rows() != mean.size()) {
    throw std::invalid_argument("project_rows: dimension mismatch");
  }
}

void check_assign(const Matrix& points, const Matrix& centroids, std::span<int> assignment,
                  std::span<double> sq_distance) {
  if (points.cols() != centroids.cols() || centroids.rows() == 0 ||
      assignment.size() != static_cast<std::size_t>(points.rows()) ||
      sq_distance.size() != static_cast<std::size_t>(points.rows())) {
    throw std::invalid_argument("assign_nearest: dimension mismatch");
  }
}

std::size_t window_count(std::size_t length, std::size_t window) {
  if (window == 0) throw std::invalid_argument("window_peaks: window must be positive");
  return (length + window - 1) / window;
}

void check_grid(const Matrix& centroids, const Grid& grid) {
  if (centroids.cols() != 2 || centroids.rows() == 0 || grid.nx == 0 || grid.ny == 0) {
    throw std::invalid_argument("nearest_on_grid: needs 2D centroids and a non-empty grid");
  }
}

}  // namespace

namespace serial {

void project_rows(const Matrix& x, const Vector& mean, const Matrix& basis, Matrix& out) {
  check_projection(x, mean, basis);
  out.resize(x.rows(), basis.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < basis.cols(); ++j) out(i, j) = project_one(x, mean, basis, i, j);
}

void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> assignment,
                    std::span<double> sq_distance) {
  check_assign(points, centroids, assignment, sq_distance);
  for (Index i = 0; i < points.rows(); ++i) {
    nearest_one(points, centroids, i, assignment[static_cast<std::size_t>(i)],
                sq_distance[static_cast<std::size_t>(i)]);
  }
}

std::vector<WindowPeak> window_peaks(std::span<const double> x, std::size_t window) {
  const std::size_t count = window_count(x.size(), window);
  std::vector<WindowPeak> out(count);
  for (std::size_t w = 0; w < count; ++w) {
    out[w] = peak_in(x, w * window, std::min(x.size(), (w + 1) * window));
  }
  return out;
}

std::vector<int> nearest_on_grid(const Matrix& centroids, const Grid& grid) {
  check_grid(centroids, grid);
  std::vector<int> out(grid.nx * grid.ny);
  for (std::size_t j = 0; j < grid.ny; ++j)
    for (std::size_t i = 0; i < grid.nx; ++i)
      out[j * grid.nx + i] = nearest_cell(centroids, grid.cell_x(i), grid.cell_y(j));
  return out;
}

}  // namespace serial

namespace parallel {

void project_rows(const Matrix& x, const Vector& mean, const Matrix& basis, Matrix& out) {
  check_projection(x, mean, basis);
  out.resize(x.rows(), basis.cols());
  const Index rows = x.rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < basis.cols(); ++j) out(i, j) = project_one(x, mean, basis, i, j);
}

void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> assignment,
                    std::span<double> sq_distance) {
  check_assign(points, centroids, assignment, sq_distance);
  const Index rows = points.rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    nearest_one(points, centroids, i, assignment[static_cast<std::size_t>(i)],
                sq_distance[static_cast<std::size_t>(i)]);
  }
}

std::vector<WindowPeak> window_peaks(std::span<const double> x, std::size_t window) {
  const auto count = static_cast<Index>(window_count(x.size(), window));
  std::vector<WindowPeak> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (Index w = 0; w < count; ++w) {
    const auto uw = static_cast<std::size_t>(w);
    out[uw] = peak_in(x, uw * window, std::min(x.size(), (uw + 1) * window));
  }
  return out;
}

std::vector<int> nearest_on_grid(const Matrix& centroids, const Grid& grid) {
  check_grid(centroids, grid);
  std::vector<int> out(grid.nx * grid.ny);
  const auto ny = static_cast<Index>(grid.ny);
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < ny; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    for (std::size_t i = 0; i < grid.nx; ++i)
      out[uj * grid.nx + i] = nearest_cell(centroids, grid.cell_x(i), grid.cell_y(uj));
  }
  return out;
}

}  // namespace parallel
}  // namespace taptest::kernels
