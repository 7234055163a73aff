// Copyright 2026 The tvfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvfx/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "tvfx/common.hpp"

namespace tvfx {

AudioClip::AudioClip(std::vector<double> s, int rate, int ch)
    : samples(std::move(s)), sample_rate(rate), channels(ch) {
  if (rate <= 0) fail(ErrorKind::kUsage, "AudioClip: sample_rate must be > 0");
  if (ch != 1 && ch != 2) fail(ErrorKind::kUsage, "AudioClip: 1 or 2 channels");
  if (samples.size() % static_cast<std::size_t>(ch) != 0) {
    fail(ErrorKind::kUsage, "AudioClip: sample count not a multiple of channels");
  }
}

AudioClip AudioClip::channel(int c) const {
  if (c < 0 || c >= channels) fail(ErrorKind::kUsage, "AudioClip::channel: out of range");
  std::vector<double> out(num_frames());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = samples[i * channels + c];
  }
  return AudioClip(std::move(out), sample_rate, 1);
}

AudioClip AudioClip::stereo(const AudioClip& left, const AudioClip& right) {
  if (left.samples.size() != right.samples.size() ||
      left.sample_rate != right.sample_rate || !left.mono() || !right.mono()) {
    fail(ErrorKind::kUsage, "AudioClip::stereo: inputs must be matched mono clips");
  }
  std::vector<double> out(left.samples.size() * 2);
  for (std::size_t i = 0; i < left.samples.size(); ++i) {
    out[2 * i] = left.samples[i];
    out[2 * i + 1] = right.samples[i];
  }
  return AudioClip(std::move(out), left.sample_rate, 2);
}

double AudioClip::peak() const {
  double p = 0.0;
  for (double v : samples) p = std::max(p, std::abs(v));
  return p;
}

double AudioClip::rms() const {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

AudioClip normalize_amplitude(const AudioClip& clip) {
  double p = clip.peak();
  if (p == 0.0) {
    fail(ErrorKind::kNumeric, "normalize_amplitude: all-zero clip");
  }
  AudioClip out = clip;
  double g = 1.0 / p;
  for (auto& v : out.samples) v *= g;
  return out;
}

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  }
  T out;
  std::memcpy(&out, &v, sizeof(T));
  return out;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  std::uint64_t v = 0;
  std::memcpy(&v, &value, sizeof(T));
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

}  // namespace

AudioClip read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open WAV file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    fail(ErrorKind::kFormat, "not a RIFF file: " + path);
  }
  read_le<std::uint32_t>(in);  // riff size, unused
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    fail(ErrorKind::kFormat, "not a WAVE file: " + path);
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  std::vector<char> data;
  bool have_data = false;

  while (in) {
    in.read(tag, 4);
    if (!in) break;
    std::uint32_t chunk_size = read_le<std::uint32_t>(in);
    if (!in) fail(ErrorKind::kFormat, "truncated chunk header: " + path);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) fail(ErrorKind::kFormat, "fmt chunk too small: " + path);
      format = read_le<std::uint16_t>(in);
      channels = read_le<std::uint16_t>(in);
      rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      in.ignore(chunk_size - 16);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      in.read(data.data(), chunk_size);
      if (static_cast<std::uint32_t>(in.gcount()) != chunk_size) {
        fail(ErrorKind::kFormat, "truncated data chunk: " + path);
      }
      have_data = true;
    } else {
      in.ignore(chunk_size + (chunk_size % 2));  // chunks are word-aligned
    }
  }
  if (!have_fmt || !have_data) {
    fail(ErrorKind::kFormat, "missing fmt/data chunk: " + path);
  }
  if (channels != 1 && channels != 2) {
    fail(ErrorKind::kFormat, "unsupported channel count " +
                                 std::to_string(channels) + ": " + path);
  }
  if (rate == 0) fail(ErrorKind::kFormat, "zero sample rate: " + path);

  std::vector<double> samples;
  if (format == kFormatPcm && bits == 16) {
    std::size_t n = data.size() / 2;
    samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint16_t u = static_cast<unsigned char>(data[2 * i]) |
                        (static_cast<std::uint16_t>(
                             static_cast<unsigned char>(data[2 * i + 1]))
                         << 8);
      std::int16_t s;
      std::memcpy(&s, &u, 2);
      samples[i] = static_cast<double>(s) / 32768.0;
    }
  } else if (format == kFormatFloat && bits == 32) {
    std::size_t n = data.size() / 4;
    samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t u = 0;
      for (int b = 0; b < 4; ++b) {
        u |= static_cast<std::uint32_t>(
                 static_cast<unsigned char>(data[4 * i + b]))
             << (8 * b);
      }
      float f;
      std::memcpy(&f, &u, 4);
      samples[i] = static_cast<double>(f);
    }
  } else {
    fail(ErrorKind::kFormat,
         "unsupported WAV encoding (format " + std::to_string(format) + ", " +
             std::to_string(bits) + " bits): " + path);
  }
  samples.resize(samples.size() - samples.size() % channels);
  return AudioClip(std::move(samples), static_cast<int>(rate), channels);
}

void write_wav(const AudioClip& clip, const std::string& path, WavFormat format) {
  for (double v : clip.samples) {
    if (!std::isfinite(v)) {
      fail(ErrorKind::kNumeric, "write_wav: non-finite sample");
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot open for writing: " + path);

  bool clipped = false;
  std::uint16_t bits = format == WavFormat::kPcm16 ? 16 : 32;
  std::uint16_t fmt_code = format == WavFormat::kPcm16 ? kFormatPcm : kFormatFloat;
  std::uint32_t data_bytes =
      static_cast<std::uint32_t>(clip.samples.size()) * (bits / 8);
  std::uint16_t block_align = static_cast<std::uint16_t>(clip.channels * (bits / 8));

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, fmt_code);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(clip.channels));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(clip.sample_rate));
  write_le<std::uint32_t>(out,
                          static_cast<std::uint32_t>(clip.sample_rate) * block_align);
  write_le<std::uint16_t>(out, block_align);
  write_le<std::uint16_t>(out, bits);
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_bytes);

  if (format == WavFormat::kPcm16) {
    for (double v : clip.samples) {
      if (v > 1.0 || v < -1.0) clipped = true;
      double scaled = std::round(std::clamp(v, -1.0, 1.0) * 32768.0);
      std::int16_t s = static_cast<std::int16_t>(
          std::clamp(scaled, -32768.0, 32767.0));
      write_le<std::int16_t>(out, s);
    }
  } else {
    for (double v : clip.samples) {
      if (v > 1.0 || v < -1.0) clipped = true;
      write_le<float>(out, static_cast<float>(std::clamp(v, -1.0, 1.0)));
    }
  }
  if (clipped) {
    log_warn("write_wav: samples outside [-1, 1] saturated in " + path);
  }
  if (!out) fail(ErrorKind::kIo, "write failed: " + path);
}

}  // namespace tvfx
