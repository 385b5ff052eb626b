#pragma once

// Surrogate tap signals: a step plus a sinusoid plus Gaussian noise.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taptest/tap_table.hpp"
#include "taptest/waveform.hpp"

namespace taptest {

struct ClassParams {
  double amplitude = 1.0;          // linear amplitude units (the "dB" figures are used as-is)
  double angular_frequency = 1.0;  // rad/s
  double step_initial = 1.0;
  double step_time = 0.15;         // s
  std::string label;

  void validate() const;
};

struct SynthConfig {
  double sample_rate = 100.0;  // Hz
  double duration = 1.0;       // s
  double noise_std = 0.1;
  std::size_t sub_signals_per_class = 30;
  std::uint64_t rng_seed = 0;
  std::size_t n = 100;  // variables per row in synth_dataset

  void validate() const;
  /// Number of samples a synthesized signal carries.
  std::size_t sample_count() const;
};

/// The five reference classes: (1.0, 20), (0.7, 25), (0.4, 15), (0.8, 18),
/// (1.5, 13) as (amplitude, rad/s), each with a unit step at 0.15 s.
/// Labels are "class1" .. "class5".
std::vector<ClassParams> default_classes();

/// x(t) = step(t) + amplitude * sin(omega * t) + noise(t) with t = i / sample_rate.
/// The noise stream is seeded from (rng_seed, label, instance_index), so any
/// instance can be regenerated on its own.
Waveform synth_signal(const ClassParams& params, const SynthConfig& config,
                      std::size_t instance_index);

/// |classes| * sub_signals_per_class labeled rows of length config.n; each row
/// is the first n samples of one synthesized signal. Rows are grouped by
/// class in the order given.
TapTable synth_dataset(std::span<const ClassParams> classes, const SynthConfig& config);

}  // namespace taptest
