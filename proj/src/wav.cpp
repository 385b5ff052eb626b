#include "taptest/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "json.hpp"

#include "taptest/errors.hpp"

namespace taptest {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>((v >> s) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

std::vector<std::uint8_t> header(std::uint16_t format, int channels, double sample_rate, int bits,
                                 std::size_t data_bytes) {
  const auto rate = static_cast<std::uint32_t>(std::llround(sample_rate));
  const auto block = static_cast<std::uint16_t>(channels * bits / 8);
  std::vector<std::uint8_t> out;
  put_tag(out, "RIFF");
  put_u32(out, static_cast<std::uint32_t>(36 + data_bytes));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, format);
  put_u16(out, static_cast<std::uint16_t>(channels));
  put_u32(out, rate);
  put_u32(out, rate * block);
  put_u16(out, block);
  put_u16(out, static_cast<std::uint16_t>(bits));
  put_tag(out, "data");
  put_u32(out, static_cast<std::uint32_t>(data_bytes));
  return out;
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const auto where = [&](const std::string& what) { return IoError(path.string() + ": " + what); };

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw where("not a RIFF/WAVE file");
  }

  std::uint16_t format = 0;
  int channels = 0;
  std::uint32_t rate = 0;
  int bits = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) {
      // Tolerate an over-long data chunk size from streaming recorders.
      if (std::memcmp(chunk, "data", 4) != 0) throw where("truncated chunk");
    }
    const std::size_t avail = std::min(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw where("fmt chunk too short");
      format = read_u16(chunk + 8);
      channels = read_u16(chunk + 10);
      rate = read_u32(chunk + 12);
      bits = read_u16(chunk + 22);
      if (format == kFormatExtensible) {
        if (avail < 40) throw where("extensible fmt chunk too short");
        format = read_u16(chunk + 8 + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = avail;
    }
    pos = body + avail + (avail % 2);
  }

  if (!have_fmt) throw where("missing fmt chunk");
  if (data == nullptr) throw where("missing data chunk");
  if (channels < 1 || rate == 0) throw where("corrupt fmt chunk");
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw where("unsupported encoding (format " + std::to_string(format) + ", " + std::to_string(bits) +
                " bits); expected 16-bit PCM or 32-bit float");
  }

  const std::size_t bytes_per_sample = static_cast<std::size_t>(bits / 8);
  const std::size_t frame_bytes = bytes_per_sample * static_cast<std::size_t>(channels);
  const std::size_t frames = data_size / frame_bytes;
  if (static_cast<double>(frames) > kMaxWavSeconds * rate) {
    throw DataError(path.string() + ": recording longer than " + std::to_string(kMaxWavSeconds) + " s");
  }

  Waveform w;
  w.sample_rate = static_cast<double>(rate);
  w.channel_count = 1;
  w.samples.resize(frames);
  for (std::size_t fi = 0; fi < frames; ++fi) {
    double sum = 0.0;
    for (int c = 0; c < channels; ++c) {
      const std::uint8_t* s = data + fi * frame_bytes + static_cast<std::size_t>(c) * bytes_per_sample;
      if (pcm16) {
        sum += static_cast<std::int16_t>(read_u16(s)) / 32768.0;
      } else {
        const std::uint32_t raw = read_u32(s);
        float v;
        std::memcpy(&v, &raw, sizeof v);
        sum += static_cast<double>(v);
      }
    }
    w.samples[fi] = sum / channels;
  }
  return w;
}

void write_wav_pcm16(const std::filesystem::path& path, std::span<const double> samples, double sample_rate) {
  auto bytes = header(kFormatPcm, 1, sample_rate, 16, samples.size() * 2);
  for (double x : samples) {
    const auto q = std::clamp<long long>(std::llround(x * 32768.0), -32768, 32767);
    put_u16(bytes, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  write_bytes(path, bytes);
}

void write_wav_float32(const std::filesystem::path& path, std::span<const double> samples, double sample_rate,
                       int channels) {
  if (channels < 1 || samples.size() % static_cast<std::size_t>(channels) != 0) {
    throw std::invalid_argument("sample count must be a multiple of the channel count");
  }
  auto bytes = header(kFormatFloat, channels, sample_rate, 32, samples.size() * 4);
  for (double x : samples) {
    const float v = static_cast<float>(x);
    std::uint32_t raw;
    std::memcpy(&raw, &v, sizeof raw);
    put_u32(bytes, raw);
  }
  write_bytes(path, bytes);
}

double write_scaled_wav(const std::filesystem::path& path, std::span<const double> samples, double sample_rate) {
  double peak = 0.0;
  for (double x : samples) peak = std::max(peak, std::abs(x));
  const double full_scale = 32767.0 / 32768.0;
  const double scale = peak > 0.0 ? full_scale / peak : 1.0;

  std::vector<double> scaled(samples.begin(), samples.end());
  for (auto& x : scaled) x *= scale;
  write_wav_pcm16(path, scaled, sample_rate);

  nlohmann::json meta;
  meta["wav"] = path.filename().string();
  meta["scale_factor"] = scale;
  meta["sample_rate"] = sample_rate;
  meta["samples"] = samples.size();
  meta["encoding"] = "pcm16";
  auto sidecar = path;
  sidecar.replace_extension(".json");
  std::ofstream f(sidecar);
  if (!f) throw IoError("cannot open '" + sidecar.string() + "' for writing");
  f << meta.dump(2) << '\n';
  return scale;
}

}  // namespace taptest
