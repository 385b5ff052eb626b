#pragma once

#include <cstddef>
#include <vector>

namespace taptest {

/// A sampled recording. Multi-channel audio is stored interleaved.
struct Waveform {
  std::vector<double> samples;
  double sample_rate = 44100.0;
  int channel_count = 1;

  std::size_t frames() const {
    return channel_count > 0 ? samples.size() / static_cast<std::size_t>(channel_count) : 0;
  }
  double duration() const { return static_cast<double>(frames()) / sample_rate; }

  /// Channel average. Returns a copy when already mono.
  Waveform to_mono() const;
};

}  // namespace taptest
