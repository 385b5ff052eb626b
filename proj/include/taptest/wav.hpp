#pragma once

#include <filesystem>
#include <span>

#include "taptest/waveform.hpp"

namespace taptest {

/// Longest recording read_wav accepts.
inline constexpr double kMaxWavSeconds = 600.0;

/// Reads RIFF/WAVE with 16-bit PCM or 32-bit float samples (plain or
/// WAVE_FORMAT_EXTENSIBLE). PCM is scaled by 1/32768. Multi-channel input is
/// averaged to mono. Throws IoError for unreadable or malformed files.
Waveform read_wav(const std::filesystem::path& path);

/// Mono 16-bit PCM; samples are clamped to the representable range.
void write_wav_pcm16(const std::filesystem::path& path, std::span<const double> samples,
                     double sample_rate);

/// Interleaved 32-bit float with `channels` channels.
void write_wav_float32(const std::filesystem::path& path, std::span<const double> samples,
                       double sample_rate, int channels = 1);

/// Writes `samples` as 16-bit PCM scaled so the largest |x| hits full scale,
/// plus a JSON sidecar (same stem, .json) recording the scale factor:
/// original = stored / scale_factor. Returns the scale factor.
double write_scaled_wav(const std::filesystem::path& path, std::span<const double> samples,
                        double sample_rate);

}  // namespace taptest
