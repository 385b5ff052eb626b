#include "taptest/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "taptest/clustering.hpp"
#include "taptest/csv.hpp"
#include "taptest/errors.hpp"
#include "taptest/model_store.hpp"
#include "taptest/pipeline.hpp"
#include "taptest/plot.hpp"
#include "taptest/rng.hpp"
#include "taptest/segmentation.hpp"
#include "taptest/synthesis.hpp"
#include "taptest/wav.hpp"

namespace taptest::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every setting a subcommand can use. Defaults, then --config, then flags.
struct RunConfig {
  std::uint64_t seed = 0;
  fs::path output_dir = ".";
  double split_fraction = 0.6;

  SynthConfig synth;
  std::size_t class_count = 5;
  std::vector<ClassParams> custom_classes;
  bool write_wav = false;

  SegmentationConfig segmentation;

  std::size_t components = 2;
  std::optional<double> variance_threshold;
  std::optional<std::size_t> k;
  std::size_t restarts = 10;
  std::size_t max_iterations = 300;
  std::map<std::string, std::size_t> train_counts;
};

template <class T>
void read_key(const json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const std::string& where) {
  if (!j.is_object()) throw UsageError("config section '" + where + "' must be an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) { return key == k; }) == known.end()) {
      throw UsageError("unknown config key '" + where + key + "'");
    }
  }
}

void apply_config(RunConfig& cfg, const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path.string() + "' is not valid JSON");
  }
  reject_unknown(j, {"seed", "output_dir", "split_fraction", "synthesis", "segmentation", "training"}, "");
  read_key(j, "seed", cfg.seed);
  if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  read_key(j, "split_fraction", cfg.split_fraction);
  if (j.contains("synthesis")) {
    const json& s = j.at("synthesis");
    reject_unknown(s, {"sample_rate", "duration", "noise_std", "count", "n", "classes", "wav"}, "synthesis.");
    read_key(s, "sample_rate", cfg.synth.sample_rate);
    read_key(s, "duration", cfg.synth.duration);
    read_key(s, "noise_std", cfg.synth.noise_std);
    read_key(s, "count", cfg.synth.sub_signals_per_class);
    read_key(s, "n", cfg.synth.n);
    read_key(s, "classes", cfg.class_count);
    read_key(s, "wav", cfg.write_wav);
  }
  if (j.contains("segmentation")) {
    const json& s = j.at("segmentation");
    reject_unknown(s, {"peak_window", "tap_length_n", "low_factor", "high_factor"}, "segmentation.");
    read_key(s, "peak_window", cfg.segmentation.peak_window);
    read_key(s, "tap_length_n", cfg.segmentation.tap_length_n);
    read_key(s, "low_factor", cfg.segmentation.low_factor);
    read_key(s, "high_factor", cfg.segmentation.high_factor);
  }
  if (j.contains("training")) {
    const json& s = j.at("training");
    reject_unknown(s, {"components", "variance_threshold", "k", "restarts", "max_iterations", "train_counts"},
                   "training.");
    read_key(s, "components", cfg.components);
    if (s.contains("variance_threshold")) cfg.variance_threshold = s.at("variance_threshold").get<double>();
    if (s.contains("k")) cfg.k = s.at("k").get<std::size_t>();
    read_key(s, "restarts", cfg.restarts);
    read_key(s, "max_iterations", cfg.max_iterations);
    read_key(s, "train_counts", cfg.train_counts);
  }
}

ClassParams parse_class_spec(const std::string& spec) {
  // AMPLITUDE:OMEGA:LABEL
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--class expects AMPLITUDE:OMEGA:LABEL, got '" + spec + "'");
  ClassParams p;
  try {
    p.amplitude = std::stod(spec.substr(0, a));
    p.angular_frequency = std::stod(spec.substr(a + 1, b - a - 1));
  } catch (const std::exception&) {
    throw UsageError("--class expects numeric amplitude and omega, got '" + spec + "'");
  }
  p.label = spec.substr(b + 1);
  if (p.label.empty()) throw UsageError("--class needs a label");
  return p;
}

std::pair<std::string, std::size_t> parse_train_count(const std::string& spec) {
  const auto eq = spec.rfind('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--train-count expects LABEL=N, got '" + spec + "'");
  try {
    return {spec.substr(0, eq), static_cast<std::size_t>(std::stoul(spec.substr(eq + 1)))};
  } catch (const std::exception&) {
    throw UsageError("--train-count expects LABEL=N, got '" + spec + "'");
  }
}

fs::path output_path(const RunConfig& cfg, const std::string& explicit_path, const char* default_name) {
  if (!explicit_path.empty()) return explicit_path;
  fs::create_directories(cfg.output_dir);
  return cfg.output_dir / default_name;
}

void ensure_parent(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
}

std::string mean_distance_summary(const RegionModel& region, const std::vector<Placement>& placements) {
  std::ostringstream os;
  std::vector<double> mean(region.k(), 0.0);
  std::map<std::string, std::size_t> nearest;
  for (const auto& p : placements) {
    for (std::size_t c = 0; c < region.k(); ++c) mean[c] += p.normalized_distances[c];
    ++nearest[p.nearest_label];
  }
  os << "untrained taps: " << placements.size() << '\n';
  for (std::size_t c = 0; c < region.k(); ++c) {
    mean[c] /= static_cast<double>(std::max<std::size_t>(placements.size(), 1));
    os << "mean normalized distance to " << region.cluster_to_label[c] << ": " << format_double(mean[c]) << '\n';
  }
  for (const auto& [label, count] : nearest) os << "nearest region " << label << ": " << count << " taps\n";
  return os.str();
}

void write_placements(const fs::path& path, const RegionModel& region, const std::vector<Placement>& placements,
                      const std::vector<std::string>& labels, bool predicted_column) {
  std::ostringstream os;
  os << "label," << (predicted_column ? "predicted" : "nearest");
  for (std::size_t c = 1; c <= region.c(); ++c) os << ",pc" << c;
  for (const auto& l : region.cluster_to_label) os << ',' << csv_field("dist_" + l);
  os << '\n';
  for (std::size_t r = 0; r < placements.size(); ++r) {
    const auto& p = placements[r];
    os << (labels.empty() ? std::string{} : csv_field(labels[r])) << ',' << csv_field(p.nearest_label);
    for (Eigen::Index c = 0; c < p.score.size(); ++c) os << ',' << format_double(p.score(c));
    for (double d : p.normalized_distances) os << ',' << format_double(d);
    os << '\n';
  }
  write_text_file(path, os.str());
}

ScoreTable placement_scores(const std::vector<Placement>& placements, std::vector<std::string> labels) {
  ScoreTable s;
  const auto c = placements.empty() ? 0 : placements.front().score.size();
  s.scores.resize(static_cast<Eigen::Index>(placements.size()), c);
  for (std::size_t r = 0; r < placements.size(); ++r) s.scores.row(static_cast<Eigen::Index>(r)) = placements[r].score.transpose();
  s.labels = std::move(labels);
  return s;
}

int cmd_simulate(const RunConfig& cfg, const std::string& out_csv, std::ostream& out) {
  std::vector<ClassParams> classes = cfg.custom_classes;
  if (classes.empty()) {
    const auto defaults = default_classes();
    if (cfg.class_count < 1 || cfg.class_count > defaults.size()) {
      throw UsageError("--classes must be between 1 and " + std::to_string(defaults.size()));
    }
    classes.assign(defaults.begin(), defaults.begin() + static_cast<std::ptrdiff_t>(cfg.class_count));
  }
  SynthConfig synth = cfg.synth;
  synth.rng_seed = derive_seed(cfg.seed, "simulate");
  const TapTable table = synth_dataset(classes, synth);
  const fs::path path = output_path(cfg, out_csv, "simulated.csv");
  ensure_parent(path);
  write_csv_table(path, table);
  out << "wrote " << table.m() << " rows x " << table.n() << " variables to " << path.string() << '\n';

  if (cfg.write_wav) {
    const fs::path dir = path.parent_path().empty() ? fs::path("wav") : path.parent_path() / "wav";
    fs::create_directories(dir);
    std::size_t files = 0;
    for (const auto& c : classes) {
      for (std::size_t i = 0; i < synth.sub_signals_per_class; ++i) {
        const Waveform w = synth_signal(c, synth, i);
        write_scaled_wav(dir / (c.label + "_" + std::to_string(i) + ".wav"), w.samples, w.sample_rate);
        ++files;
      }
    }
    out << "wrote " << files << " WAV files with scale sidecars to " << dir.string() << '\n';
  }
  return kOk;
}

int cmd_segment(const RunConfig& cfg, const std::vector<std::string>& inputs, const std::vector<std::string>& labels,
                const std::string& out_csv, std::ostream& out) {
  if (!labels.empty() && labels.size() != 1 && labels.size() != inputs.size()) {
    throw UsageError("give one --label for all inputs or one per input");
  }
  std::vector<TapTable> parts;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string label = labels.empty() ? std::string{} : labels.size() == 1 ? labels[0] : labels[i];
    const Waveform w = read_wav(inputs[i]);
    TapTable t;
    try {
      t = segment(w, cfg.segmentation, label);
    } catch (const DataError& e) {
      throw DataError(inputs[i] + ": " + e.what());
    }
    out << inputs[i] << ": " << t.m() << " taps\n";
    parts.push_back(std::move(t));
  }
  const TapTable table = concat(parts);
  const fs::path path = output_path(cfg, out_csv, "taps.csv");
  ensure_parent(path);
  write_csv_table(path, table);
  out << "wrote " << table.m() << " taps to " << path.string() << '\n';
  return kOk;
}

int cmd_train(const RunConfig& cfg, const std::string& input, const std::string& model_out, std::ostream& out) {
  const TapTable table = read_csv_table(input);
  SplitOptions split_opts;
  split_opts.train_fraction = cfg.split_fraction;
  split_opts.seed = derive_seed(cfg.seed, "split");
  split_opts.fixed_train_counts = cfg.train_counts;
  const Split split = stratified_split(table, split_opts);

  TrainOptions opts;
  opts.components = cfg.components;
  opts.variance_threshold = cfg.variance_threshold;
  opts.k = cfg.k;
  opts.restarts = cfg.restarts;
  opts.max_iterations = cfg.max_iterations;
  opts.seed = derive_seed(cfg.seed, "train");
  opts.segmentation = cfg.segmentation;
  const TrainResult trained = train_machine(split.train, opts);

  const fs::path model_path = output_path(cfg, model_out, "model.json");
  ensure_parent(model_path);
  save(trained.machine, model_path);
  fs::create_directories(cfg.output_dir);
  write_csv_table(cfg.output_dir / "train.csv", split.train);
  write_score_csv(cfg.output_dir / "train_scores.csv", trained.train_scores);

  std::optional<Evaluation> eval;
  if (split.test.m() > 0) {
    write_csv_table(cfg.output_dir / "test.csv", split.test);
    eval = evaluate(trained.machine, split.test);
    write_score_csv(cfg.output_dir / "test_scores.csv", eval->scores);
  }

  std::ostringstream report;
  report << split_report(split, eval ? &eval->matrix : nullptr) << '\n';
  report << explained_report(trained.machine.pca, 2);
  report << "components reaching 95% of the variance: " << select_components(trained.machine.pca, 0.95) << '\n';
  report << "regions: k = " << trained.machine.regions.k() << " in " << trained.machine.regions.c()
         << "D score space, k-means objective " << format_double(trained.kmeans.objective) << '\n';
  report << "training taps inside their own region: " << trained.agreement << " of " << split.train.m() << '\n';
  if (eval) report << "held-out accuracy: " << eval->matrix.trace() << " of " << eval->matrix.total() << '\n';
  report << "model written to " << model_path.string() << '\n';
  write_text_file(cfg.output_dir / "report.txt", report.str());
  out << report.str();
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& model_path, const std::string& input,
                 const std::string& out_csv, std::ostream& out) {
  const TrainedMachine machine = load(model_path);
  const TapTable table = read_csv_table(input);
  const auto placements = project_unknown(machine.pca, machine.regions, table);

  std::vector<std::string> predicted;
  for (const auto& p : placements) predicted.push_back(p.nearest_label);
  const fs::path path = output_path(cfg, out_csv, "predictions.csv");
  ensure_parent(path);
  write_placements(path, machine.regions, placements, table.labels, true);
  write_score_csv(path.parent_path() / (path.stem().string() + "_scores.csv"), placement_scores(placements, predicted));

  std::map<std::string, std::size_t> counts;
  for (const auto& p : predicted) ++counts[p];
  for (const auto& [label, count] : counts) out << label << ": " << count << " taps\n";
  out << "wrote predictions for " << placements.size() << " taps to " << path.string() << '\n';
  return kOk;
}

int cmd_evaluate(const RunConfig& cfg, const std::string& model_path, const std::string& input,
                 const std::string& out_csv, std::ostream& out) {
  const TrainedMachine machine = load(model_path);
  const TapTable table = read_csv_table(input);
  const Evaluation eval = evaluate(machine, table);
  const fs::path path = output_path(cfg, out_csv, "confusion.csv");
  ensure_parent(path);
  write_text_file(path, eval.matrix.to_csv());
  out << eval.matrix.to_text();
  out << "accuracy: " << format_double(eval.matrix.accuracy()) << '\n';
  out << "confusion matrix written to " << path.string() << '\n';
  return kOk;
}

int cmd_project(const RunConfig& cfg, const std::string& model_path, const std::string& input,
                const std::string& out_csv, std::ostream& out) {
  const TrainedMachine machine = load(model_path);
  const TapTable table = read_csv_table(input);
  const auto placements = project_unknown(machine.pca, machine.regions, table);
  const fs::path path = output_path(cfg, out_csv, "placements.csv");
  ensure_parent(path);
  write_placements(path, machine.regions, placements, table.labels, false);
  std::vector<std::string> labels = table.labels;
  if (labels.empty()) labels.assign(placements.size(), "untrained");
  write_score_csv(path.parent_path() / (path.stem().string() + "_scores.csv"), placement_scores(placements, labels));
  out << mean_distance_summary(machine.regions, placements);
  out << "placements written to " << path.string() << '\n';
  return kOk;
}

int cmd_plot(const RunConfig& cfg, const std::string& model_path, const std::vector<std::string>& score_files,
             const std::string& title, const std::string& out_svg, std::ostream& out) {
  const TrainedMachine machine = load(model_path);
  std::vector<PlotSeries> series;
  for (const auto& f : score_files) series.push_back({fs::path(f).stem().string(), read_score_csv(f)});
  PlotOptions options;
  if (!title.empty()) options.title = title;
  const std::string svg = render_scatter_svg(machine.regions, series, options);
  const fs::path path = output_path(cfg, out_svg, "plot.svg");
  ensure_parent(path);
  write_text_file(path, svg);
  out << "wrote " << path.string() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tap-sound classification with PCA scores and k-means regions", "taptest"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string config_path, output_dir;
  auto* o_seed = app.add_option("--seed", seed, "Seed for every random stream (default 0)");
  app.add_option("--config", config_path, "JSON file with run settings")->check(CLI::ExistingFile);
  auto* o_outdir = app.add_option("--output-dir", output_dir, "Directory for default output files");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Write a labeled synthetic tap table");
  std::size_t n_classes = 5, count = 30, n_vars = 100;
  double noise = 0.1, rate = 100.0, duration = 1.0;
  std::vector<std::string> class_specs;
  std::string sim_out;
  bool wav = false;
  auto* o_classes = sim->add_option("--classes", n_classes, "Use the first N reference classes (1-5)");
  auto* o_count = sim->add_option("--count", count, "Sub-signals per class");
  auto* o_noise = sim->add_option("--noise", noise, "Gaussian noise standard deviation");
  auto* o_rate = sim->add_option("--sample-rate", rate, "Samples per second");
  auto* o_duration = sim->add_option("--duration", duration, "Signal length in seconds");
  auto* o_n = sim->add_option("--n", n_vars, "Variables (samples) per row");
  sim->add_option("--class", class_specs, "Custom class AMPLITUDE:OMEGA:LABEL (repeatable)");
  auto* o_wav = sim->add_flag("--wav", wav, "Also write one 16-bit WAV per sub-signal");
  sim->add_option("--out", sim_out, "Output CSV");

  // segment
  auto* seg = app.add_subcommand("segment", "Cut WAV recordings into a tap table");
  std::vector<std::string> seg_inputs, seg_labels;
  std::string seg_out;
  double peak_window = 0.5, low = 0.5, high = 1.5;
  std::size_t tap_n = 100;
  seg->add_option("--input", seg_inputs, "WAV recordings")->required();
  seg->add_option("--label", seg_labels, "Label for all inputs, or one per input");
  auto* o_window = seg->add_option("--peak-window", peak_window, "Peak search window in seconds");
  auto* o_tap_n = seg->add_option("--tap-length", tap_n, "Samples kept per tap");
  auto* o_low = seg->add_option("--low-factor", low, "Reject peaks below this multiple of the median");
  auto* o_high = seg->add_option("--high-factor", high, "Reject peaks above this multiple of the median");
  seg->add_option("--out", seg_out, "Output CSV");

  // train
  auto* train = app.add_subcommand("train", "Fit PCA + k-means regions on a labeled table");
  std::string train_input, model_out;
  double split = 0.6, threshold = 0.95;
  std::size_t components = 2, k = 0, restarts = 10;
  std::vector<std::string> train_counts;
  bool table1 = false;
  train->add_option("--input", train_input, "Labeled tap CSV")->required();
  train->add_option("--model", model_out, "Model JSON to write");
  auto* o_split = train->add_option("--split", split, "Training share per class (0, 1)");
  auto* o_components = train->add_option("--components", components, "Score dimensions for the regions");
  auto* o_threshold = train->add_option("--variance-threshold", threshold,
                                        "Use the fewest components reaching this explained share");
  auto* o_k = train->add_option("--k", k, "Cluster count (default: number of labels)");
  auto* o_restarts = train->add_option("--restarts", restarts, "k-means restarts");
  train->add_option("--train-count", train_counts, "Fixed training taps LABEL=N (repeatable)");
  train->add_flag("--table1-replica", table1, "Train on 44/43/40 taps of the first three labels");

  // classify / evaluate / project share the model + input pair
  auto* classify_cmd = app.add_subcommand("classify", "Predict labels for taps");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Confusion matrix for labeled taps");
  auto* project_cmd = app.add_subcommand("project", "Place untrained taps relative to the regions");
  std::string model_in, data_in, result_out;
  for (auto* sc : {classify_cmd, evaluate_cmd, project_cmd}) {
    sc->add_option("--model", model_in, "Model JSON")->required();
    sc->add_option("--input", data_in, "Tap CSV")->required();
    sc->add_option("--out", result_out, "Output CSV");
  }

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "SVG scatter of 2D scores over the regions");
  std::vector<std::string> score_files;
  std::string plot_out, title;
  plot_cmd->add_option("--model", model_in, "Model JSON")->required();
  plot_cmd->add_option("--scores", score_files, "Score CSV files (label,pc1,pc2)")->required();
  plot_cmd->add_option("--title", title, "Plot title");
  plot_cmd->add_option("--out", plot_out, "Output SVG");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "taptest: usage error: " << msg << '\n';
    return kUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_config(cfg, config_path);
    if (o_seed->count()) cfg.seed = seed;
    if (o_outdir->count()) cfg.output_dir = output_dir;

    if (o_classes->count()) cfg.class_count = n_classes;
    if (o_count->count()) cfg.synth.sub_signals_per_class = count;
    if (o_noise->count()) cfg.synth.noise_std = noise;
    if (o_rate->count()) cfg.synth.sample_rate = rate;
    if (o_duration->count()) cfg.synth.duration = duration;
    if (o_n->count()) cfg.synth.n = n_vars;
    if (o_wav->count()) cfg.write_wav = wav;
    for (const auto& s : class_specs) cfg.custom_classes.push_back(parse_class_spec(s));

    if (o_window->count()) cfg.segmentation.peak_window = peak_window;
    if (o_tap_n->count()) cfg.segmentation.tap_length_n = tap_n;
    if (o_low->count()) cfg.segmentation.low_factor = low;
    if (o_high->count()) cfg.segmentation.high_factor = high;

    if (o_split->count()) cfg.split_fraction = split;
    if (o_components->count()) cfg.components = components;
    if (o_threshold->count()) cfg.variance_threshold = threshold;
    if (o_k->count()) cfg.k = k;
    if (o_restarts->count()) cfg.restarts = restarts;
    for (const auto& s : train_counts) cfg.train_counts.insert(parse_train_count(s));

    if (!(cfg.split_fraction > 0.0 && cfg.split_fraction < 1.0)) {
      throw UsageError("split fraction must lie strictly between 0 and 1");
    }
    try {
      cfg.segmentation.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (sim->parsed()) return cmd_simulate(cfg, sim_out, out);
    if (seg->parsed()) return cmd_segment(cfg, seg_inputs, seg_labels, seg_out, out);
    if (train->parsed()) {
      if (table1) {
        const TapTable probe = read_csv_table(train_input);
        const auto labels = probe.distinct_labels();
        if (labels.size() > 3) throw UsageError("--table1-replica expects at most three labels");
        const std::size_t replica[] = {44, 43, 40};
        for (std::size_t i = 0; i < labels.size(); ++i) cfg.train_counts.emplace(labels[i], replica[i]);
      }
      return cmd_train(cfg, train_input, model_out, out);
    }
    if (classify_cmd->parsed()) return cmd_classify(cfg, model_in, data_in, result_out, out);
    if (evaluate_cmd->parsed()) return cmd_evaluate(cfg, model_in, data_in, result_out, out);
    if (project_cmd->parsed()) return cmd_project(cfg, model_in, data_in, result_out, out);
    if (plot_cmd->parsed()) return cmd_plot(cfg, model_in, score_files, title, plot_out, out);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "taptest: usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "taptest: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "taptest: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "taptest: error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace taptest::cli
