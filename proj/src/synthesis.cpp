#include "taptest/synthesis.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "taptest/errors.hpp"
#include "taptest/rng.hpp"

namespace taptest {

void ClassParams::validate() const {
  if (!(amplitude > 0.0)) throw std::invalid_argument("class amplitude must be positive");
  if (!(angular_frequency > 0.0)) {
    throw std::invalid_argument("class angular frequency must be positive");
  }
  if (!(step_time >= 0.0)) throw std::invalid_argument("class step time must be non-negative");
  if (!std::isfinite(step_initial)) throw std::invalid_argument("class step value must be finite");
}

void SynthConfig::validate() const {
  if (!(sample_rate > 0.0)) throw std::invalid_argument("sample_rate must be positive");
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");
  if (!(noise_std >= 0.0)) throw std::invalid_argument("noise_std must be non-negative");
  if (sub_signals_per_class < 1) throw std::invalid_argument("sub_signals_per_class must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

std::size_t SynthConfig::sample_count() const {
  // The small bias absorbs products like 0.7 * 100 landing just below 70.
  return static_cast<std::size_t>(std::floor(duration * sample_rate + 1e-9));
}

std::vector<ClassParams> default_classes() {
  return {
      {1.0, 20.0, 1.0, 0.15, "class1"}, {0.7, 25.0, 1.0, 0.15, "class2"},
      {0.4, 15.0, 1.0, 0.15, "class3"}, {0.8, 18.0, 1.0, 0.15, "class4"},
      {1.5, 13.0, 1.0, 0.15, "class5"},
  };
}

Waveform synth_signal(const ClassParams& params, const SynthConfig& config,
                      std::size_t instance_index) {
  params.validate();
  config.validate();
  if (instance_index >= config.sub_signals_per_class) {
    throw std::invalid_argument("instance_index must be below sub_signals_per_class");
  }
  Waveform w;
  w.sample_rate = config.sample_rate;
  w.channel_count = 1;
  w.samples.resize(config.sample_count());

  std::mt19937_64 engine(derive_seed(config.rng_seed, params.label, instance_index));
  std::normal_distribution<double> noise(0.0, config.noise_std > 0.0 ? config.noise_std : 1.0);

  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const double t = static_cast<double>(i) / config.sample_rate;
    double x = (t >= params.step_time ? params.step_initial : 0.0) +
               params.amplitude * std::sin(params.angular_frequency * t);
    if (config.noise_std > 0.0) x += noise(engine);
    w.samples[i] = x;
  }
  return w;
}

TapTable synth_dataset(std::span<const ClassParams> classes, const SynthConfig& config) {
  config.validate();
  if (classes.empty()) throw std::invalid_argument("synth_dataset needs at least one class");
  std::set<std::string> seen;
  for (const auto& c : classes) {
    c.validate();
    if (!seen.insert(c.label).second) {
      throw std::invalid_argument("duplicate class label '" + c.label + "'");
    }
  }
  if (config.sample_count() < config.n) {
    throw DataError("duration * sample_rate gives " + std::to_string(config.sample_count()) +
                    " samples, fewer than n = " + std::to_string(config.n));
  }

  const std::size_t per = config.sub_signals_per_class;
  TapTable table;
  table.rows.resize(static_cast<Eigen::Index>(classes.size() * per),
                    static_cast<Eigen::Index>(config.n));
  table.labels.reserve(classes.size() * per);
  Eigen::Index row = 0;
  for (const auto& c : classes) {
    for (std::size_t k = 0; k < per; ++k, ++row) {
      const Waveform w = synth_signal(c, config, k);
      for (std::size_t v = 0; v < config.n; ++v) table.rows(row, static_cast<Eigen::Index>(v)) = w.samples[v];
      table.labels.push_back(c.label);
    }
  }
  return table;
}

}  // namespace taptest
