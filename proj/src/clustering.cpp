#include "taptest/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "taptest/errors.hpp"
#include "taptest/kernels.hpp"
#include "taptest/rng.hpp"

namespace taptest {
namespace {

using Index = Eigen::Index;

double squared_distance(const Matrix& a, Index i, const Matrix& b, Index j) {
  double d = 0.0;
  for (Index k = 0; k < a.cols(); ++k) {
    const double diff = a(i, k) - b(j, k);
    d += diff * diff;
  }
  return d;
}

Matrix seed_centroids(const Matrix& points, std::size_t k, std::mt19937_64& engine) {
  const Index m = points.rows();
  Matrix centroids(static_cast<Index>(k), points.cols());
  std::uniform_int_distribution<Index> pick(0, m - 1);
  centroids.row(0) = points.row(pick(engine));

  std::vector<double> weight(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) weight[static_cast<std::size_t>(i)] = squared_distance(points, i, centroids, 0);

  for (Index c = 1; c < static_cast<Index>(k); ++c) {
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    std::uniform_real_distribution<double> u(0.0, total);
    const double target = u(engine);
    Index chosen = -1;
    double cumulative = 0.0;
    for (Index i = 0; i < m; ++i) {
      const double w = weight[static_cast<std::size_t>(i)];
      if (w <= 0.0) continue;
      chosen = i;
      cumulative += w;
      if (cumulative > target) break;
    }
    // chosen >= 0 because there are at least k distinct rows
    centroids.row(c) = points.row(chosen);
    for (Index i = 0; i < m; ++i) {
      auto& w = weight[static_cast<std::size_t>(i)];
      w = std::min(w, squared_distance(points, i, centroids, c));
    }
  }
  return centroids;
}

void update_centroids(const Matrix& points, std::span<const int> assignment, Matrix& centroids) {
  Matrix sums = Matrix::Zero(centroids.rows(), centroids.cols());
  std::vector<std::size_t> counts(static_cast<std::size_t>(centroids.rows()), 0);
  for (Index i = 0; i < points.rows(); ++i) {
    const int c = assignment[static_cast<std::size_t>(i)];
    sums.row(c) += points.row(i);
    ++counts[static_cast<std::size_t>(c)];
  }
  for (Index c = 0; c < centroids.rows(); ++c) {
    const auto count = counts[static_cast<std::size_t>(c)];
    if (count > 0) centroids.row(c) = sums.row(c) / static_cast<double>(count);
  }
}

// Moves the point farthest from its centroid into each empty cluster. Every
// move strictly lowers the objective.
void repair_empty_clusters(const Matrix& points, std::vector<int>& assignment, Matrix& centroids) {
  const auto k = static_cast<std::size_t>(centroids.rows());
  for (std::size_t guard = 0; guard < k * static_cast<std::size_t>(points.rows()) + 1; ++guard) {
    std::vector<std::size_t> counts(k, 0);
    for (int a : assignment) ++counts[static_cast<std::size_t>(a)];
    const auto empty = std::find(counts.begin(), counts.end(), std::size_t{0});
    if (empty == counts.end()) return;

    Index farthest = 0;
    double far_d = -1.0;
    for (Index i = 0; i < points.rows(); ++i) {
      const double d = squared_distance(points, i, centroids, assignment[static_cast<std::size_t>(i)]);
      if (d > far_d) {
        far_d = d;
        farthest = i;
      }
    }
    const auto j = static_cast<Index>(empty - counts.begin());
    centroids.row(j) = points.row(farthest);
    assignment[static_cast<std::size_t>(farthest)] = static_cast<int>(j);
  }
}

// One sweep of single-point transfers: moving x from cluster a (size na > 1)
// to b lowers the objective by na/(na-1)|x-mu_a|^2 - nb/(nb+1)|x-mu_b|^2.
// Lloyd fixed points can still admit such moves. Returns true if any point moved.
bool transfer_pass(const Matrix& points, std::vector<int>& assignment, Matrix& centroids) {
  const auto k = static_cast<std::size_t>(centroids.rows());
  std::vector<double> counts(k, 0.0);
  for (int a : assignment) counts[static_cast<std::size_t>(a)] += 1.0;
  bool moved = false;
  for (Index i = 0; i < points.rows(); ++i) {
    const auto a = static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)]);
    if (counts[a] <= 1.0) continue;
    const double leave = counts[a] / (counts[a] - 1.0) * squared_distance(points, i, centroids, static_cast<Index>(a));
    std::size_t target = a;
    double best = leave * (1.0 - 1e-12);
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      const double join = counts[b] / (counts[b] + 1.0) * squared_distance(points, i, centroids, static_cast<Index>(b));
      if (join < best) {
        best = join;
        target = b;
      }
    }
    if (target == a) continue;
    const auto ai = static_cast<Index>(a), bi = static_cast<Index>(target);
    centroids.row(ai) = (counts[a] * centroids.row(ai) - points.row(i)) / (counts[a] - 1.0);
    centroids.row(bi) = (counts[target] * centroids.row(bi) + points.row(i)) / (counts[target] + 1.0);
    counts[a] -= 1.0;
    counts[target] += 1.0;
    assignment[static_cast<std::size_t>(i)] = static_cast<int>(target);
    moved = true;
  }
  return moved;
}

struct LloydOutcome {
  Matrix centroids;
  std::vector<int> assignment;
  KMeansRun run;
};

LloydOutcome lloyd(const Matrix& points, std::size_t k, std::uint64_t seed, std::size_t max_iterations) {
  std::mt19937_64 engine(seed);
  LloydOutcome out;
  out.centroids = seed_centroids(points, k, engine);

  const auto m = static_cast<std::size_t>(points.rows());
  out.assignment.assign(m, 0);
  std::vector<int> next(m, 0);
  std::vector<double> dist(m, 0.0);
  kernels::serial::assign_nearest(points, out.centroids, out.assignment, dist);

  for (std::size_t it = 0; it < max_iterations; ++it) {
    repair_empty_clusters(points, out.assignment, out.centroids);
    update_centroids(points, out.assignment, out.centroids);
    out.run.objective_trace.push_back(kmeans_objective(points, out.centroids, out.assignment));
    out.run.iterations = it + 1;

    kernels::serial::assign_nearest(points, out.centroids, next, dist);
    if (next == out.assignment) {
      if (!transfer_pass(points, out.assignment, out.centroids)) {
        out.run.converged = true;
        break;
      }
      continue;
    }
    out.assignment.swap(next);
  }
  out.run.objective = out.run.objective_trace.back();
  return out;
}

}  // namespace

double kmeans_objective(const Matrix& points, const Matrix& centroids, std::span<const int> assignments) {
  if (assignments.size() != static_cast<std::size_t>(points.rows())) {
    throw std::invalid_argument("kmeans_objective: one assignment per row required");
  }
  double total = 0.0;
  for (Index i = 0; i < points.rows(); ++i) {
    total += squared_distance(points, i, centroids, assignments[static_cast<std::size_t>(i)]);
  }
  return total;
}

std::size_t count_distinct_rows(const Matrix& points) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(points.rows()));
  for (Index i = 0; i < points.rows(); ++i) {
    rows[static_cast<std::size_t>(i)].assign(points.row(i).begin(), points.row(i).end());
  }
  std::sort(rows.begin(), rows.end());
  return static_cast<std::size_t>(std::unique(rows.begin(), rows.end()) - rows.begin());
}

KMeansResult kmeans_fit(const Matrix& points, const KMeansOptions& options) {
  if (options.k < 1) throw std::invalid_argument("k must be >= 1");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (points.rows() == 0 || points.cols() == 0) throw DataError("k-means needs a non-empty score table");
  if (!points.allFinite()) throw DataError("k-means input contains non-finite values");
  const std::size_t distinct = count_distinct_rows(points);
  if (options.k > distinct) {
    throw DataError("k = " + std::to_string(options.k) + " exceeds the " + std::to_string(distinct) +
                    " distinct score rows");
  }

  const auto restarts = static_cast<Index>(options.restarts);
  std::vector<LloydOutcome> outcomes(options.restarts);
#pragma omp parallel for schedule(dynamic)
  for (Index r = 0; r < restarts; ++r) {
    outcomes[static_cast<std::size_t>(r)] =
        lloyd(points, options.k, derive_seed(options.seed, "kmeans-restart", static_cast<std::uint64_t>(r)),
              options.max_iterations);
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].run.objective < outcomes[best].run.objective) best = r;
  }

  KMeansResult result;
  result.centroids = outcomes[best].centroids;
  result.assignments = outcomes[best].assignment;
  result.objective = outcomes[best].run.objective;
  result.best_restart = best;
  result.runs.reserve(outcomes.size());
  for (auto& o : outcomes) result.runs.push_back(std::move(o.run));
  return result;
}

LabelMapping map_clusters_to_labels(std::span<const int> assignments, std::span<const std::string> labels,
                                    std::size_t k) {
  if (assignments.size() != labels.size()) {
    throw std::invalid_argument("assignments and labels must have equal length");
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::set<std::string> unique(labels.begin(), labels.end());
  const std::vector<std::string> names(unique.begin(), unique.end());
  if (names.size() < k) {
    throw DataError("only " + std::to_string(names.size()) + " distinct labels for " + std::to_string(k) +
                    " clusters");
  }
  if (names.size() > 8) throw std::invalid_argument("label mapping supports at most 8 labels");

  std::vector<std::vector<std::size_t>> counts(k, std::vector<std::size_t>(names.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int c = assignments[i];
    if (c < 0 || static_cast<std::size_t>(c) >= k) throw std::invalid_argument("cluster index out of range");
    const auto l = static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), labels[i]) - names.begin());
    ++counts[static_cast<std::size_t>(c)][l];
  }

  std::vector<std::size_t> perm(names.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best_perm = perm;
  std::size_t best_score = 0;
  bool first = true;
  do {
    std::size_t score = 0;
    for (std::size_t c = 0; c < k; ++c) score += counts[c][perm[c]];
    if (first || score > best_score) {
      best_score = score;
      best_perm = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  LabelMapping out;
  out.agreement = best_score;
  for (std::size_t c = 0; c < k; ++c) out.cluster_to_label.push_back(names[best_perm[c]]);
  return out;
}

void RegionModel::validate() const {
  if (centroids.rows() < 1) throw ValidationError("invariant violated: region model needs k >= 1");
  if (centroids.cols() < 1) throw ValidationError("invariant violated: region model needs c >= 1");
  if (!centroids.allFinite()) throw ValidationError("invariant violated: centroids must be finite");
  for (Index a = 0; a < centroids.rows(); ++a)
    for (Index b = a + 1; b < centroids.rows(); ++b)
      if (centroids.row(a) == centroids.row(b)) {
        throw ValidationError("invariant violated: centroids must be pairwise distinct");
      }
  if (cluster_to_label.size() != k()) {
    throw ValidationError("invariant violated: cluster_to_label must cover every cluster");
  }
  std::set<std::string> unique;
  for (const auto& l : cluster_to_label) {
    if (l.empty()) throw ValidationError("invariant violated: cluster labels must be non-empty");
    if (!unique.insert(l).second) {
      throw ValidationError("invariant violated: distinct clusters may not share a label");
    }
  }
}

std::vector<int> nearest_cluster(const RegionModel& region, const Matrix& scores) {
  if (static_cast<std::size_t>(scores.cols()) != region.c()) {
    throw DataError("dimension mismatch: scores have " + std::to_string(scores.cols()) +
                    " components, regions expect " + std::to_string(region.c()));
  }
  const auto m = static_cast<std::size_t>(scores.rows());
  std::vector<int> assignment(m, 0);
  std::vector<double> dist(m, 0.0);
  kernels::parallel::assign_nearest(scores, region.centroids, assignment, dist);
  return assignment;
}

std::vector<std::string> classify(const RegionModel& region, const ScoreTable& scores) {
  const auto nearest = nearest_cluster(region, scores.scores);
  std::vector<std::string> out;
  out.reserve(nearest.size());
  for (int c : nearest) out.push_back(region.cluster_to_label[static_cast<std::size_t>(c)]);
  return out;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) t += row_sum(i);
  return t;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
  return t;
}

std::size_t ConfusionMatrix::row_sum(std::size_t i) const {
  return std::accumulate(counts.at(i).begin(), counts.at(i).end(), std::size_t{0});
}

double ConfusionMatrix::accuracy() const {
  const auto t = total();
  return t == 0 ? 0.0 : static_cast<double>(trace()) / static_cast<double>(t);
}

std::string ConfusionMatrix::to_text() const {
  std::size_t width = std::string("true \\ predicted").size();
  for (const auto& l : class_labels) width = std::max(width, l.size());
  std::size_t cell = 6;
  for (const auto& l : class_labels) cell = std::max(cell, l.size() + 2);

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "true \\ predicted";
  for (const auto& l : class_labels) os << std::right << std::setw(static_cast<int>(cell)) << l;
  os << std::right << std::setw(static_cast<int>(cell)) << "total" << '\n';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(width)) << class_labels[i];
    for (auto v : counts[i]) os << std::right << std::setw(static_cast<int>(cell)) << v;
    os << std::right << std::setw(static_cast<int>(cell)) << row_sum(i) << '\n';
  }
  os << "correct " << trace() << " of " << total() << '\n';
  return os.str();
}

std::string ConfusionMatrix::to_csv() const {
  std::ostringstream os;
  os << "true\\predicted";
  for (const auto& l : class_labels) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    os << class_labels[i];
    for (auto v : counts[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

ConfusionMatrix confusion(std::span<const std::string> truth, std::span<const std::string> predicted,
                          std::span<const std::string> class_order) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("true and predicted label sequences differ in length");
  }
  ConfusionMatrix cm;
  cm.class_labels.assign(class_order.begin(), class_order.end());
  cm.counts.assign(class_order.size(), std::vector<std::size_t>(class_order.size(), 0));
  auto index_of = [&](const std::string& label) {
    const auto it = std::find(class_order.begin(), class_order.end(), label);
    if (it == class_order.end()) throw DataError("unknown label '" + label + "'");
    return static_cast<std::size_t>(it - class_order.begin());
  };
  for (std::size_t i = 0; i < truth.size(); ++i) ++cm.counts[index_of(truth[i])][index_of(predicted[i])];
  return cm;
}

std::vector<Placement> project_unknown(const PcaModel& pca, const RegionModel& region, const TapTable& table) {
  const ScoreTable scores = transform(pca, table, region.c());
  const auto nearest = nearest_cluster(region, scores.scores);
  const auto k = static_cast<Index>(region.k());

  std::vector<Placement> out(scores.rows());
  for (std::size_t r = 0; r < out.size(); ++r) {
    const auto i = static_cast<Index>(r);
    Placement& p = out[r];
    p.score = scores.scores.row(i).transpose();
    p.nearest_label = region.cluster_to_label[static_cast<std::size_t>(nearest[r])];
    p.normalized_distances.resize(static_cast<std::size_t>(k));
    double sum = 0.0;
    for (Index c = 0; c < k; ++c) {
      const double d = std::sqrt(squared_distance(scores.scores, i, region.centroids, c));
      p.normalized_distances[static_cast<std::size_t>(c)] = d;
      sum += d;
    }
    for (auto& d : p.normalized_distances) d = sum > 0.0 ? d / sum : 1.0 / static_cast<double>(k);
  }
  return out;
}

}  // namespace taptest
