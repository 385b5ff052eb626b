#include "taptest/waveform.hpp"

#include <stdexcept>

namespace taptest {

Waveform Waveform::to_mono() const {
  if (channel_count < 1) throw std::invalid_argument("waveform channel_count must be >= 1");
  if (channel_count == 1) return *this;
  Waveform out;
  out.sample_rate = sample_rate;
  out.channel_count = 1;
  const auto ch = static_cast<std::size_t>(channel_count);
  out.samples.resize(frames());
  for (std::size_t f = 0; f < out.samples.size(); ++f) {
    double sum = 0.0;
    for (std::size_t c = 0; c < ch; ++c) sum += samples[f * ch + c];
    out.samples[f] = sum / static_cast<double>(ch);
  }
  return out;
}

}  // namespace taptest
