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

#pragma once

#include <cstddef>
#include <vector>

namespace tvfx {

/// A sampled waveform. Samples are dimensionless with nominal range
/// [-1, 1]; stereo clips are interleaved L R L R ...
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 16000;
  int channels = 1;

  AudioClip() = default;
  AudioClip(std::vector<double> s, int rate, int ch = 1);

  std::size_t num_frames() const {
    return samples.size() / static_cast<std::size_t>(channels);
  }
  double duration_seconds() const {
    return static_cast<double>(num_frames()) / sample_rate;
  }
  bool mono() const { return channels == 1; }

  /// Extracts one channel as a mono clip.
  AudioClip channel(int c) const;
  /// Interleaves two equal-length mono clips into a stereo clip.
  static AudioClip stereo(const AudioClip& left, const AudioClip& right);

  double peak() const;
  double rms() const;
};

/// Scales so the peak absolute sample is exactly 1. Fails on silence.
AudioClip normalize_amplitude(const AudioClip& clip);

}  // namespace tvfx
