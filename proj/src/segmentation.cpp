#include "taptest/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taptest/errors.hpp"
#include "taptest/kernels.hpp"

namespace taptest {
namespace {

const std::vector<double>& mono_samples(const Waveform& w, Waveform& scratch) {
  if (w.channel_count == 1) return w.samples;
  scratch = w.to_mono();
  return scratch.samples;
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

void SegmentationConfig::validate() const {
  if (!(peak_window > 0.0)) throw std::invalid_argument("peak_window must be positive");
  if (tap_length_n < 1) throw std::invalid_argument("tap_length_n must be >= 1");
  if (!(low_factor > 0.0 && low_factor < 1.0 && high_factor > 1.0)) {
    throw std::invalid_argument("rejection band must satisfy 0 < low_factor < 1 < high_factor");
  }
}

std::size_t SegmentationConfig::window_samples(double sample_rate) const {
  if (!(sample_rate > 0.0)) throw std::invalid_argument("sample_rate must be positive");
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(peak_window * sample_rate)));
}

std::vector<std::size_t> detect_peaks(const Waveform& w, const SegmentationConfig& cfg) {
  cfg.validate();
  Waveform scratch;
  const auto& x = mono_samples(w, scratch);
  if (x.empty()) return {};

  const auto windows = kernels::parallel::window_peaks(x, cfg.window_samples(w.sample_rate));
  double global_max = 0.0;
  for (const auto& p : windows) global_max = std::max(global_max, p.magnitude);
  if (global_max == 0.0) return {};

  const double floor = kSilenceFloor * global_max;
  std::vector<std::size_t> peaks;
  for (const auto& p : windows) {
    if (p.magnitude >= floor) peaks.push_back(p.index);
  }
  return peaks;
}

std::vector<std::size_t> reject_outlier_peaks(const Waveform& w, std::span<const std::size_t> peaks,
                                              const SegmentationConfig& cfg) {
  cfg.validate();
  if (peaks.empty()) return {};
  Waveform scratch;
  const auto& x = mono_samples(w, scratch);

  std::vector<double> amplitude;
  amplitude.reserve(peaks.size());
  for (auto p : peaks) {
    if (p >= x.size()) throw std::out_of_range("peak index beyond waveform");
    amplitude.push_back(std::abs(x[p]));
  }
  const double med = median(amplitude);
  const double lo = cfg.low_factor * med;
  const double hi = cfg.high_factor * med;

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (amplitude[i] >= lo && amplitude[i] <= hi) kept.push_back(peaks[i]);
  }
  return kept;
}

TapTable extract_taps(const Waveform& w, std::span<const std::size_t> peaks,
                      const SegmentationConfig& cfg, const std::string& label) {
  cfg.validate();
  Waveform scratch;
  const auto& x = mono_samples(w, scratch);
  const std::size_t n = cfg.tap_length_n;

  std::vector<std::size_t> usable;
  for (auto p : peaks) {
    if (p + n <= x.size()) usable.push_back(p);
  }
  if (usable.empty()) throw DataError("no valid taps in recording");

  TapTable table;
  table.rows.resize(static_cast<Eigen::Index>(usable.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < usable.size(); ++r) {
    for (std::size_t v = 0; v < n; ++v) {
      table.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(v)) = x[usable[r] + v];
    }
  }
  if (!label.empty()) table.labels.assign(usable.size(), label);
  return table;
}

TapTable segment(const Waveform& w, const SegmentationConfig& cfg, const std::string& label) {
  const Waveform mono = w.to_mono();
  const auto candidates = detect_peaks(mono, cfg);
  const auto kept = reject_outlier_peaks(mono, candidates, cfg);
  return extract_taps(mono, kept, cfg, label);
}

}  // namespace taptest
