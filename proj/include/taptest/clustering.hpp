#pragma once

// k-means regions in principal-component space and the nearest-region
// classifier built on them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taptest/pca.hpp"
#include "taptest/tap_table.hpp"

namespace taptest {

struct KMeansOptions {
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t restarts = 10;
  std::size_t max_iterations = 300;
};

/// Diagnostics for one seeded Lloyd run.
struct KMeansRun {
  std::vector<double> objective_trace;  // objective after each centroid update
  std::size_t iterations = 0;
  bool converged = false;
  double objective = 0.0;
};

struct KMeansResult {
  Matrix centroids;              // k x c
  std::vector<int> assignments;  // one cluster index per row
  double objective = 0.0;        // sum of squared distances to assigned centroids
  std::size_t best_restart = 0;
  std::vector<KMeansRun> runs;   // one per restart
};

/// Lloyd iteration from distance-weighted (k-means++) seeds, repeated
/// `restarts` times; the lowest objective wins, ties to the earlier restart.
/// Restarts run concurrently and the result does not depend on thread count.
/// An empty cluster is reseeded at the point farthest from its centroid.
KMeansResult kmeans_fit(const Matrix& points, const KMeansOptions& options);

double kmeans_objective(const Matrix& points, const Matrix& centroids,
                        std::span<const int> assignments);

std::size_t count_distinct_rows(const Matrix& points);

struct LabelMapping {
  std::vector<std::string> cluster_to_label;
  std::size_t agreement = 0;  // rows whose label equals their cluster's label
};

/// One-to-one cluster -> label assignment with maximum agreement, searched
/// over every pairing (labels ordered lexicographically; first best wins).
LabelMapping map_clusters_to_labels(std::span<const int> assignments,
                                    std::span<const std::string> labels, std::size_t k);

/// Trained regions: centroid cells (Voronoi) each owned by one label.
struct RegionModel {
  Matrix centroids;  // k x c
  std::vector<std::string> cluster_to_label;

  std::size_t k() const { return static_cast<std::size_t>(centroids.rows()); }
  std::size_t c() const { return static_cast<std::size_t>(centroids.cols()); }

  /// Throws ValidationError naming the violated invariant.
  void validate() const;
};

/// Nearest-centroid label per row; ties go to the lower cluster index.
std::vector<std::string> classify(const RegionModel& region, const ScoreTable& scores);

/// Nearest-centroid cluster index per row.
std::vector<int> nearest_cluster(const RegionModel& region, const Matrix& scores);

struct ConfusionMatrix {
  std::vector<std::string> class_labels;
  std::vector<std::vector<std::size_t>> counts;  // [true][predicted]

  std::size_t total() const;
  std::size_t trace() const;
  std::size_t row_sum(std::size_t i) const;
  double accuracy() const;
  std::string to_text() const;
  std::string to_csv() const;
};

ConfusionMatrix confusion(std::span<const std::string> truth, std::span<const std::string> predicted,
                          std::span<const std::string> class_order);

/// Placement of one untrained tap relative to the trained regions.
struct Placement {
  Vector score;
  std::string nearest_label;
  std::vector<double> normalized_distances;  // distance to each centroid / sum of distances
};

std::vector<Placement> project_unknown(const PcaModel& pca, const RegionModel& region,
                                       const TapTable& table);

}  // namespace taptest
