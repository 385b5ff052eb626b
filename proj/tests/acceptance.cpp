// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support.hpp"
#include "taptest/clustering.hpp"
#include "taptest/errors.hpp"
#include "taptest/model_store.hpp"
#include "taptest/pca.hpp"
#include "taptest/pipeline.hpp"
#include "taptest/rng.hpp"
#include "taptest/segmentation.hpp"
#include "taptest/synthesis.hpp"

using namespace taptest;
namespace tt = taptest::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct SurrogateClass {
  ClassParams params;
  std::size_t total;
  std::size_t train;
  double noise;
};

TapTable surrogate_table(const std::vector<SurrogateClass>& classes, std::uint64_t seed) {
  std::vector<TapTable> parts;
  for (const auto& c : classes) {
    SynthConfig cfg;
    cfg.sub_signals_per_class = c.total;
    cfg.noise_std = c.noise;
    cfg.rng_seed = seed;
    const ClassParams one[] = {c.params};
    parts.push_back(synth_dataset(one, cfg));
  }
  return concat(parts);
}

Evaluation run_surrogate(const std::vector<SurrogateClass>& classes, std::uint64_t seed) {
  const TapTable table = surrogate_table(classes, seed);
  SplitOptions so;
  so.seed = derive_seed(seed, "split");
  for (const auto& c : classes) so.fixed_train_counts[c.params.label] = c.train;
  const Split split = stratified_split(table, so);
  TrainOptions to;
  to.seed = derive_seed(seed, "train");
  const TrainResult trained = train_machine(split.train, to);
  return evaluate(trained.machine, split.test);
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  SynthConfig cfg;
  cfg.rng_seed = derive_seed(0, "simulate");
  const auto classes = default_classes();
  const TapTable table = synth_dataset(classes, cfg);
  SplitOptions so;
  so.seed = derive_seed(0, "split");
  const Split split = stratified_split(table, so);
  TrainOptions to;
  to.seed = derive_seed(0, "train");
  const TrainResult trained = train_machine(split.train, to);
  const Evaluation eval = evaluate(trained.machine, split.test);
  const double elapsed = seconds_since(t0);
  const double pc12 = trained.machine.pca.explained(0) + trained.machine.pca.explained(1);
  Outcome o;
  o.pass = table.m() == 150 && split.train.m() == 90 && split.test.m() == 60 && eval.matrix.trace() == 60 &&
           pc12 >= 0.80 && pc12 <= 0.99 && elapsed < 5.0;
  o.detail = fmt("accuracy %.0f/60, PC1+PC2 = %.4f, %.3f s", static_cast<double>(eval.matrix.trace()), pc12, elapsed);
  return o;
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(derive_seed(2, "acceptance-pca"));
  std::uniform_int_distribution<std::size_t> dm(5, 40), dn(2, 12);
  double worst = 0.0;
  std::size_t compared = 0, skipped = 0;
  const int tables = 200;
  for (int t = 0; t < tables; ++t) {
    const std::size_t m = dm(rng), n = dn(rng);
    TapTable table;
    table.rows = tt::random_table(rng, m, n);
    const PcaModel model = fit(table);
    const auto oracle = tt::covariance_oracle(table.rows);
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
      worst = std::max(worst, std::abs(model.explained(j) - oracle.explained(j)));
      if (j < model.singular_values.size()) {
        const double sigma = std::sqrt(oracle.eigenvalues(j) * static_cast<double>(m - 1));
        worst = std::max(worst, std::abs(model.singular_values(j) - sigma) / std::max(1.0, sigma));
      }
      if (tt::well_separated(oracle.eigenvalues, j)) {
        worst = std::max(worst, (model.projection.col(j) - oracle.vectors.col(j)).cwiseAbs().maxCoeff());
        ++compared;
      } else {
        ++skipped;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = worst <= 1e-6 && elapsed < 10.0 && compared > skipped;
  o.detail = fmt("%.0f tables, max deviation %.2e, %.3f s", tables, worst, elapsed) +
             fmt(" (%.0f vectors compared, %.0f null-space vectors exempt)", static_cast<double>(compared),
                 static_cast<double>(skipped));
  return o;
}

Outcome criterion3() {
  std::mt19937_64 rng(derive_seed(2, "acceptance-pca"));
  std::uniform_int_distribution<std::size_t> dm(5, 40), dn(2, 12);
  double worst = 0.0;
  const int tables = 200;
  for (int t = 0; t < tables; ++t) {
    const std::size_t m = dm(rng), n = dn(rng);
    TapTable table;
    table.rows = tt::random_table(rng, m, n);
    const PcaModel model = fit(table);
    const Matrix ref = tt::reference_scores(table.rows);
    const ScoreTable s = transform(model, table, n);
    const auto oracle = tt::covariance_oracle(table.rows);
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
      // Columns of repeated nonzero singular values are basis-dependent.
      if (oracle.eigenvalues(j) > 1e-9 * oracle.eigenvalues(0) && !tt::well_separated(oracle.eigenvalues, j)) continue;
      worst = std::max(worst, (s.scores.col(j) - ref.col(j)).cwiseAbs().maxCoeff());
    }
  }
  Outcome o;
  o.pass = worst <= 1e-8;
  o.detail = fmt("%.0f tables, max |S - V*Delta| = %.2e", tables, worst);
  return o;
}

Outcome criterion4() {
  std::mt19937_64 rng(derive_seed(4, "acceptance-kmeans"));
  std::uniform_int_distribution<std::size_t> dm(3, 10);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const int fixtures = 100;
  int optimal = 0, monotone = 0;
  for (int f = 0; f < fixtures; ++f) {
    const std::size_t m = dm(rng);
    Matrix p(static_cast<Eigen::Index>(m), 2);
    // Alternate between loose Gaussian clouds and two offset blobs.
    const double offset = (f % 2 == 0) ? 0.0 : u(rng) + 4.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double shift = (i % 2 == 0) ? 0.0 : offset;
      p(i, 0) = g(rng) + shift;
      p(i, 1) = g(rng) + shift;
    }
    KMeansOptions opts;
    opts.k = 2;
    opts.restarts = 10;
    opts.seed = derive_seed(4, "fixture", static_cast<std::uint64_t>(f));
    const KMeansResult r = kmeans_fit(p, opts);
    const auto brute = tt::brute_force_two_means(p);
    if (std::abs(r.objective - brute.objective) <= 1e-12 * std::max(1.0, brute.objective)) ++optimal;
    bool mono = true;
    for (const auto& run : r.runs)
      for (std::size_t i = 1; i < run.objective_trace.size(); ++i)
        if (run.objective_trace[i] > run.objective_trace[i - 1] * (1.0 + 1e-12)) mono = false;
    if (mono) ++monotone;
  }
  Outcome o;
  o.pass = optimal == fixtures && monotone == fixtures;
  o.detail = fmt("%.0f/%.0f fixtures optimal, %.0f monotone", optimal, fixtures, monotone);
  return o;
}

std::string diag_text(const ConfusionMatrix& cm) {
  std::ostringstream os;
  os << "diag (";
  for (std::size_t i = 0; i < cm.counts.size(); ++i) os << (i ? ", " : "") << cm.counts[i][i];
  os << ")";
  return os.str();
}

Outcome criterion5() {
  const std::vector<SurrogateClass> separated = {
      {{1.0, 20.0, 1.0, 0.15, "specimen1"}, 73, 44, 0.1},
      {{0.7, 25.0, 1.0, 0.15, "specimen2"}, 72, 43, 0.1},
      {{1.5, 13.0, 1.0, 0.15, "specimen3"}, 67, 40, 0.1},
  };
  // Specimen 3 shares specimen 1's frequency with a slightly larger amplitude
  // and twice the noise, so some of its taps spill into specimen 1's region
  // while specimen 1 stays compact.
  std::vector<SurrogateClass> overlapped = separated;
  overlapped[2] = {{1.1, 20.0, 1.0, 0.15, "specimen3"}, 67, 40, 0.2};

  auto shape_ok = [](const ConfusionMatrix& cm) {
    return cm.total() == 85 && cm.counts.size() == 3 && cm.row_sum(0) == 29 && cm.row_sum(1) == 29 &&
           cm.row_sum(2) == 27;
  };
  const std::uint64_t seeds[] = {1, 2, 3, 4, 5};
  bool pass = true;
  std::string detail;
  for (std::uint64_t seed : seeds) {
    const Evaluation a = run_surrogate(separated, seed);
    const Evaluation b = run_surrogate(overlapped, seed);
    std::size_t off3 = 0, off_other = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) (i == 2 ? off3 : off_other) += b.matrix.counts[i][j];
    pass = pass && shape_ok(a.matrix) && shape_ok(b.matrix) && a.matrix.trace() == 85 && off3 > 0 && off_other == 0;
    if (seed == seeds[0]) {
      detail = "seed 1: separated " + diag_text(a.matrix) + ", overlapped " + diag_text(b.matrix) +
               fmt(" with %.0f row-3 errors", static_cast<double>(off3));
    }
  }
  Outcome o;
  o.pass = pass;
  o.detail = detail + "; checked over 5 seeds";
  return o;
}

Outcome criterion6() {
  const double sr = 44100.0;
  const std::size_t total = static_cast<std::size_t>(40.0 * sr);
  const auto tmpl = tt::tap_template();
  std::vector<double> x(total, 0.0);
  std::mt19937_64 rng(derive_seed(6, "session-noise"));
  std::normal_distribution<double> g(0.0, 0.001);
  for (auto& v : x) v = g(rng);

  std::set<std::size_t> occupied;
  const std::size_t window = static_cast<std::size_t>(std::lround(0.5 * sr));
  for (std::size_t i = 0; i < 72; ++i) {
    const auto at = static_cast<std::size_t>(std::lround((0.1 + 0.55 * static_cast<double>(i)) * sr));
    tt::stamp(x, tmpl, at, 1.0);
    occupied.insert(at / window);
  }
  SegmentationConfig cfg;
  Waveform clean{x, sr, 1};
  const TapTable base = segment(clean, cfg);
  bool rows_match = base.n() == 100;
  for (std::size_t r = 0; r < base.m() && rows_match; ++r)
    for (std::size_t j = 0; j < 100; ++j)
      if (std::abs(base.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) - tmpl[j]) > 0.01)
        rows_match = false;

  // Outliers go in the middle of two tap-free windows.
  std::vector<std::size_t> free_windows;
  for (std::size_t w = 1; w + 1 < total / window; ++w)
    if (!occupied.count(w)) free_windows.push_back(w);
  tt::stamp(x, tmpl, free_windows.at(0) * window + window / 2, 2.0);
  tt::stamp(x, tmpl, free_windows.at(free_windows.size() / 2) * window + window / 2, 0.1);
  Waveform injected{x, sr, 1};
  const auto candidates = detect_peaks(injected, cfg);
  const TapTable after = segment(injected, cfg);

  Outcome o;
  o.pass = base.m() == 72 && rows_match && candidates.size() == 74 && after.m() == 72 && after.n() == 100;
  o.detail = fmt("clean session %.0f rows; with outliers %.0f candidates -> %.0f rows", static_cast<double>(base.m()),
                 static_cast<double>(candidates.size()), static_cast<double>(after.m()));
  return o;
}

Outcome criterion7() {
  const auto defaults = default_classes();
  const ClassParams trained_classes[] = {defaults[0], defaults[4]};
  SynthConfig cfg;
  cfg.rng_seed = derive_seed(7, "simulate");
  const TapTable table = synth_dataset(trained_classes, cfg);
  TrainOptions to;
  to.seed = derive_seed(7, "train");
  const TrainResult trained = train_machine(table, to);

  ClassParams mid = defaults[0];
  mid.amplitude = 0.5 * (defaults[0].amplitude + defaults[4].amplitude);
  mid.angular_frequency = 0.5 * (defaults[0].angular_frequency + defaults[4].angular_frequency);
  mid.label = "intermediate";
  const ClassParams unknown[] = {mid};
  const TapTable probe = synth_dataset(unknown, cfg);
  const auto placements = project_unknown(trained.machine.pca, trained.machine.regions, probe);
  std::vector<double> mean(trained.machine.regions.k(), 0.0);
  for (const auto& p : placements)
    for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += p.normalized_distances[c] / static_cast<double>(placements.size());
  Outcome o;
  o.pass = mean.size() == 2;
  for (double d : mean) o.pass = o.pass && d >= 0.35 && d <= 0.65;
  o.detail = "mean normalized distances (" + trained.machine.regions.cluster_to_label[0] + fmt(" %.3f, ", mean[0]) +
             trained.machine.regions.cluster_to_label[1] + fmt(" %.3f)", mean[1]);
  return o;
}

Outcome criterion8() {
  SynthConfig cfg;
  cfg.rng_seed = derive_seed(8, "simulate");
  const auto classes = default_classes();
  const TrainResult trained = train_machine(synth_dataset(classes, cfg), TrainOptions{});
  const std::string first = serialize(trained.machine);
  const std::string second = serialize(deserialize(first));

  auto doc = nlohmann::json::parse(first);
  doc["projection"][0][0] = doc["projection"][0][0].get<double>() + 0.05;
  bool rejected = false;
  std::string message;
  try {
    deserialize(doc.dump(2));
  } catch (const ValidationError& e) {
    message = e.what();
    rejected = message.find("orthonormal") != std::string::npos;
  }
  Outcome o;
  o.pass = first == second && rejected;
  o.detail = std::string(first == second ? "round trip byte-identical" : "round trip differs") + "; corrupted load: " +
             (message.empty() ? "accepted" : message);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"simulation study reproduction", criterion1},
      {"PCA matches covariance eigendecomposition", criterion2},
      {"scores equal V*Delta of the centered SVD", criterion3},
      {"k-means brute-force optimality and monotone objective", criterion4},
      {"confusion-matrix structure on three-class surrogate", criterion5},
      {"segmentation counts and outlier rejection", criterion6},
      {"untrained class lands between trained regions", criterion7},
      {"model persistence round trip and corruption check", criterion8},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
    ++index;
  }
  return failures == 0 ? 0 : 1;
}
