#pragma once

// Turns a tapping session recording into a tap table: one candidate peak per
// fixed window, amplitude-band rejection of bad hits, then a fixed-length cut
// starting at each surviving peak.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "taptest/tap_table.hpp"
#include "taptest/waveform.hpp"

namespace taptest {

struct SegmentationConfig {
  double peak_window = 0.5;       // s, non-overlapping windows anchored at t = 0
  std::size_t tap_length_n = 100; // samples per tap, peak included
  double low_factor = 0.5;        // accept |peak| >= low_factor * median
  double high_factor = 1.5;       // accept |peak| <= high_factor * median

  void validate() const;
  std::size_t window_samples(double sample_rate) const;
};

/// Windows whose max |x| falls below this fraction of the recording's global
/// max produce no candidate.
inline constexpr double kSilenceFloor = 0.01;

std::vector<std::size_t> detect_peaks(const Waveform& w, const SegmentationConfig& cfg);

/// Keeps the peaks whose |amplitude| lies inside the band around the median
/// peak amplitude. Output is a subsequence of `peaks`; empty when every peak
/// is rejected.
std::vector<std::size_t> reject_outlier_peaks(const Waveform& w, std::span<const std::size_t> peaks,
                                              const SegmentationConfig& cfg);

/// Row i holds tap_length_n samples starting at peaks[i]. Peaks without a full
/// tail are dropped. Throws DataError when no row survives. Rows get `label`
/// when it is non-empty.
TapTable extract_taps(const Waveform& w, std::span<const std::size_t> peaks,
                      const SegmentationConfig& cfg, const std::string& label = {});

/// detect_peaks -> reject_outlier_peaks -> extract_taps.
TapTable segment(const Waveform& w, const SegmentationConfig& cfg, const std::string& label = {});

}  // namespace taptest
