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

#include <utility>

#include "tvfx/audio/clip.hpp"

namespace tvfx::fx {

struct CompressorSettings {
  double attack = 0.010;    // seconds
  double release = 0.100;   // seconds
  double knee_db = 1.0;
  double ratio = 4.0;
  double threshold_db = -40.0;
};

/// Static soft-knee gain computer: output level in dB for an input level
/// in dB (Giannoulis-style feed-forward curve).
double compressor_static_out_db(double in_db, const CompressorSettings& s);

/// Feed-forward compressor: peak detector smoothed in the dB domain,
/// soft-knee gain computer, gain applied to the input.
AudioClip compressor(const AudioClip& x, const CompressorSettings& s);

/// Linkwitz-Riley 4th-order band split at fc; low + high sums allpass-flat.
std::pair<AudioClip, AudioClip> crossover_lr4(const AudioClip& x, double fc);

struct MultibandSettings {
  double crossover_hz = 500.0;
  CompressorSettings low{0.005, 0.100, 0.0, 3.0, -30.0};
  CompressorSettings high{625e-6, 0.0125, 6.0, 6.0, -60.0};
};

/// Two-band compressor: LR4 crossover, per-band compression, sum.
AudioClip multiband_compressor(const AudioClip& x,
                               const MultibandSettings& s = {});

}  // namespace tvfx::fx
