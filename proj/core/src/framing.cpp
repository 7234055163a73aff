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

#include "tvfx/audio/framing.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Copies signal[start, start + len) into dst, zero-padding out of range.
void copy_padded(const std::vector<double>& signal, long long start,
                 std::size_t len, double* dst) {
  for (std::size_t i = 0; i < len; ++i) {
    long long s = start + static_cast<long long>(i);
    dst[i] = (s >= 0 && s < static_cast<long long>(signal.size()))
                 ? signal[static_cast<std::size_t>(s)]
                 : 0.0;
  }
}
}  // namespace

std::vector<double> hanning(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                 static_cast<double>(n)));
  }
  return w;
}

nn::Tensor FrameSet::position(std::size_t p) const {
  std::size_t rows = frames.dim(1), cols = frames.dim(2);
  nn::Tensor out({rows, cols, 1});
  const double* src = frames.data() + p * rows * cols;
  for (std::size_t i = 0; i < rows * cols; ++i) out[i] = src[i];
  return out;
}

std::vector<double> FrameSet::center_frame(std::size_t p) const {
  std::size_t rows = frames.dim(1), cols = frames.dim(2);
  std::vector<double> out(cols);
  const double* src = frames.data() + (p * rows + context) * cols;
  for (std::size_t i = 0; i < cols; ++i) out[i] = src[i];
  return out;
}

FrameSet frame_signal(const AudioClip& clip, std::size_t frame_size,
                      std::size_t context) {
  if (!clip.mono()) fail(ErrorKind::kUsage, "frame_signal: clip must be mono");
  if (!power_of_two(frame_size) || frame_size < 1024 || frame_size > 8192) {
    fail(ErrorKind::kUsage,
         "frame_signal: frame size must be a power of two in [1024, 8192]");
  }
  std::size_t hop = frame_size / 2;
  std::size_t len = clip.samples.size();
  // ceil(len / hop) center frames cover the clip; one lead-in position is
  // prepended so Hanning overlap-add is exact from sample 0.
  std::size_t covering = len == 0 ? 1 : (len + hop - 1) / hop;
  std::size_t positions = covering + 1;
  std::size_t stack = 2 * context + 1;

  FrameSet fs;
  fs.frames = nn::Tensor({positions, stack, frame_size});
  fs.frame_size = frame_size;
  fs.hop = hop;
  fs.context = context;
  fs.signal_length = len;
  fs.window = Window::kRectangular;

  double* dst = fs.frames.data();
  for (std::size_t p = 0; p < positions; ++p) {
    long long center = fs.center_offset(p);
    for (std::size_t j = 0; j < stack; ++j) {
      long long offset =
          center + (static_cast<long long>(j) - static_cast<long long>(context)) *
                       static_cast<long long>(hop);
      copy_padded(clip.samples, offset, frame_size,
                  dst + (p * stack + j) * frame_size);
    }
  }
  return fs;
}

AudioClip overlap_add(const std::vector<std::vector<double>>& frame_outputs,
                      std::size_t frame_size, int sample_rate) {
  if (frame_outputs.empty()) {
    fail(ErrorKind::kUsage, "overlap_add: no frames");
  }
  for (const auto& f : frame_outputs) {
    if (f.size() != frame_size) {
      fail(ErrorKind::kUsage, "overlap_add: inconsistent frame lengths");
    }
  }
  std::size_t hop = frame_size / 2;
  std::size_t positions = frame_outputs.size();
  std::vector<double> w = hanning(frame_size);
  std::vector<double> out((positions - 1) * hop + frame_size, 0.0);
  for (std::size_t p = 0; p < positions; ++p) {
    double* dst = out.data() + p * hop;
    const double* src = frame_outputs[p].data();
    for (std::size_t i = 0; i < frame_size; ++i) dst[i] += w[i] * src[i];
  }
  return AudioClip(std::move(out), sample_rate, 1);
}

AudioClip reconstruct(const FrameSet& frame_set,
                      const std::vector<std::vector<double>>& frame_outputs,
                      int sample_rate) {
  if (frame_outputs.size() != frame_set.positions()) {
    fail(ErrorKind::kUsage, "reconstruct: frame count mismatch");
  }
  AudioClip full = overlap_add(frame_outputs, frame_set.frame_size, sample_rate);
  std::size_t hop = frame_set.hop;
  std::vector<double> out(frame_set.signal_length, 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = full.samples[i + hop];
  }
  return AudioClip(std::move(out), sample_rate, 1);
}

}  // namespace tvfx
