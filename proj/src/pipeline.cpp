#include "taptest/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "taptest/errors.hpp"
#include "taptest/rng.hpp"

namespace taptest {

Split stratified_split(const TapTable& table, const SplitOptions& options) {
  if (!(options.train_fraction > 0.0 && options.train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must lie strictly between 0 and 1");
  }
  table.validate();
  if (!table.labeled()) throw DataError("a stratified split needs labeled taps");

  std::vector<std::size_t> train_rows, test_rows;
  for (const auto& label : table.distinct_labels()) {
    auto rows = table.rows_with_label(label);
    std::mt19937_64 engine(derive_seed(options.seed, "split:" + label));
    std::shuffle(rows.begin(), rows.end(), engine);

    std::size_t count = static_cast<std::size_t>(
        std::floor(options.train_fraction * static_cast<double>(rows.size()) + 1e-9));
    if (auto it = options.fixed_train_counts.find(label); it != options.fixed_train_counts.end()) {
      count = it->second;
      if (count > rows.size()) {
        throw DataError("label '" + label + "' has " + std::to_string(rows.size()) + " taps, fewer than the " +
                        std::to_string(count) + " requested for training");
      }
    }
    train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(count));
    test_rows.insert(test_rows.end(), rows.begin() + static_cast<std::ptrdiff_t>(count), rows.end());
  }
  for (const auto& [label, count] : options.fixed_train_counts) {
    if (table.rows_with_label(label).empty()) {
      throw DataError("training count given for unknown label '" + label + "'");
    }
  }
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());

  Split split;
  split.train = table.select(train_rows);
  split.test = table.select(test_rows);
  return split;
}

TrainResult train_machine(const TapTable& training, const TrainOptions& options) {
  training.validate();
  if (!training.labeled()) throw DataError("training needs labeled taps");
  const auto labels = training.distinct_labels();
  if (labels.size() < 2) {
    throw DataError("training needs at least two classes; got only '" + labels.front() + "'");
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& l : training.labels) ++counts[l];
  for (const auto& [label, count] : counts) {
    if (count < 2) throw DataError("class '" + label + "' has fewer than 2 training taps");
  }

  TrainResult result;
  PcaModel pca = fit(training);
  const std::size_t c =
      options.variance_threshold ? select_components(pca, *options.variance_threshold) : options.components;
  if (c < 1 || c > pca.n()) throw std::invalid_argument("component count must be in [1, n]");

  result.train_scores = transform(pca, training, c);
  KMeansOptions km;
  km.k = options.k.value_or(labels.size());
  km.seed = derive_seed(options.seed, "kmeans");
  km.restarts = options.restarts;
  km.max_iterations = options.max_iterations;
  result.kmeans = kmeans_fit(result.train_scores.scores, km);

  const auto mapping = map_clusters_to_labels(result.kmeans.assignments, training.labels, km.k);
  result.agreement = mapping.agreement;

  TrainedMachine& m = result.machine;
  m.pca = std::move(pca);
  m.regions.centroids = result.kmeans.centroids;
  m.regions.cluster_to_label = mapping.cluster_to_label;
  m.segmentation = options.segmentation;
  m.segmentation.tap_length_n = training.n();
  m.provenance.label_counts = counts;
  m.provenance.fingerprint = table_fingerprint(training);
  m.validate();
  return result;
}

std::vector<std::string> class_order(const TrainedMachine& machine) {
  std::set<std::string> unique(machine.regions.cluster_to_label.begin(), machine.regions.cluster_to_label.end());
  return {unique.begin(), unique.end()};
}

Evaluation evaluate(const TrainedMachine& machine, const TapTable& labeled) {
  if (!labeled.labeled()) throw DataError("evaluation needs labeled taps");
  Evaluation out;
  out.scores = transform(machine.pca, labeled, machine.regions.c());
  out.predicted = classify(machine.regions, out.scores);
  const auto order = class_order(machine);
  out.matrix = confusion(labeled.labels, out.predicted, order);
  return out;
}

std::string split_report(const Split& split, const ConfusionMatrix* evaluation) {
  std::set<std::string> labels;
  for (const auto& l : split.train.labels) labels.insert(l);
  for (const auto& l : split.test.labels) labels.insert(l);

  std::size_t width = std::string("Selected experiments").size();
  for (const auto& l : labels) width = std::max(width, l.size());

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "Selected experiments" << " | Training taps | Testing taps";
  if (evaluation) os << " | Correctly classified";
  os << '\n';
  std::size_t train_total = 0, test_total = 0, correct_total = 0;
  for (const auto& l : labels) {
    const auto tr = split.train.rows_with_label(l).size();
    const auto te = split.test.rows_with_label(l).size();
    train_total += tr;
    test_total += te;
    os << std::left << std::setw(static_cast<int>(width)) << l << " | " << std::right << std::setw(13) << tr
       << " | " << std::setw(12) << te;
    if (evaluation) {
      const auto& names = evaluation->class_labels;
      const auto it = std::find(names.begin(), names.end(), l);
      std::size_t correct = 0;
      if (it != names.end()) {
        const auto i = static_cast<std::size_t>(it - names.begin());
        correct = evaluation->counts[i][i];
      }
      correct_total += correct;
      os << " | " << std::setw(20) << correct;
    }
    os << '\n';
  }
  os << std::left << std::setw(static_cast<int>(width)) << "Total" << " | " << std::right << std::setw(13)
     << train_total << " | " << std::setw(12) << test_total;
  if (evaluation) os << " | " << std::setw(20) << correct_total;
  os << '\n';
  return os.str();
}

std::string explained_report(const PcaModel& model, std::size_t count) {
  std::ostringstream os;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < std::min<std::size_t>(count, model.n()); ++k) {
    const double p = model.explained(static_cast<Eigen::Index>(k));
    cumulative += p;
    char line[96];
    std::snprintf(line, sizeof line, "PC%zu explains %.1f%% of the variance (cumulative %.1f%%)\n", k + 1,
                  100.0 * p, 100.0 * cumulative);
    os << line;
  }
  return os.str();
}

}  // namespace taptest
