#pragma once

// Training and evaluation flow: split labeled taps per class, fit PCA on the
// training rows, cluster their leading scores into regions, label the regions,
// then classify held-out taps and tabulate the confusion matrix.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "taptest/clustering.hpp"
#include "taptest/model_store.hpp"
#include "taptest/pca.hpp"
#include "taptest/tap_table.hpp"

namespace taptest {

struct SplitOptions {
  double train_fraction = 0.6;
  std::uint64_t seed = 0;
  /// Per-label training counts that override the fraction.
  std::map<std::string, std::size_t> fixed_train_counts;
};

struct Split {
  TapTable train;
  TapTable test;
};

/// Per label: shuffle that label's rows with a seed derived from (seed, label)
/// and send the first floor(fraction * count) to training. Both outputs keep
/// the input row order.
Split stratified_split(const TapTable& table, const SplitOptions& options);

struct TrainOptions {
  std::size_t components = 2;                 // score dimensions used for regions
  std::optional<double> variance_threshold;   // when set, c = select_components(threshold)
  std::optional<std::size_t> k;               // default: number of distinct labels
  std::size_t restarts = 10;
  std::size_t max_iterations = 300;
  std::uint64_t seed = 0;
  SegmentationConfig segmentation;            // tap_length_n is overwritten with n
};

struct TrainResult {
  TrainedMachine machine;
  ScoreTable train_scores;  // c leading components, true labels
  KMeansResult kmeans;
  std::size_t agreement = 0;
};

TrainResult train_machine(const TapTable& training, const TrainOptions& options);

struct Evaluation {
  ConfusionMatrix matrix;
  ScoreTable scores;                  // region-space scores with the true labels
  std::vector<std::string> predicted;
};

Evaluation evaluate(const TrainedMachine& machine, const TapTable& labeled);

/// Labels the trained regions know, lexicographically.
std::vector<std::string> class_order(const TrainedMachine& machine);

/// Per-class training/testing tap counts (and correct counts when an
/// evaluation is supplied), laid out as a small text table with a total row.
std::string split_report(const Split& split, const ConfusionMatrix* evaluation = nullptr);

/// "PC1 explains 66.5% ..." lines for the first `count` components.
std::string explained_report(const PcaModel& model, std::size_t count = 2);

}  // namespace taptest
