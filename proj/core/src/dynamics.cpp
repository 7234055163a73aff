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

#include "tvfx/fx/dynamics.hpp"

#include <cmath>

#include "tvfx/common.hpp"
#include "tvfx/dsp/biquad.hpp"

namespace tvfx::fx {

namespace {
constexpr double kSilenceDb = -96.0;

double to_db(double level) {
  return 20.0 * std::log10(std::max(level, 1.58489319246111348520e-5));
}
}  // namespace

double compressor_static_out_db(double in_db, const CompressorSettings& s) {
  double over = in_db - s.threshold_db;
  if (s.knee_db > 0.0 && 2.0 * std::abs(over) <= s.knee_db) {
    double t = over + s.knee_db / 2.0;
    return in_db + (1.0 / s.ratio - 1.0) * t * t / (2.0 * s.knee_db);
  }
  if (2.0 * over > s.knee_db) {
    return s.threshold_db + over / s.ratio;
  }
  return in_db;
}

AudioClip compressor(const AudioClip& x, const CompressorSettings& s) {
  if (!(s.attack > 0.0 && s.release > 0.0 && s.ratio >= 1.0)) {
    fail(ErrorKind::kUsage, "compressor: invalid settings");
  }
  double fs = x.sample_rate;
  double ca = 1.0 - std::exp(-1.0 / (fs * s.attack));
  double cr = 1.0 - std::exp(-1.0 / (fs * s.release));
  double env_db = kSilenceDb;
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double level_db = to_db(std::abs(x.samples[n]));
    env_db += (level_db - env_db) * (level_db > env_db ? ca : cr);
    double gain_db = compressor_static_out_db(env_db, s) - env_db;
    y.samples[n] = x.samples[n] * std::pow(10.0, gain_db / 20.0);
  }
  return y;
}

std::pair<AudioClip, AudioClip> crossover_lr4(const AudioClip& x, double fc) {
  if (!x.mono()) fail(ErrorKind::kUsage, "crossover_lr4: input must be mono");
  double fs = x.sample_rate;
  // LR4 = two cascaded 2nd-order Butterworth sections per band; the band
  // sum is allpass with unit magnitude.
  auto lp = dsp::butterworth_lowpass(fc, fs);
  auto hp = dsp::butterworth_highpass(fc, fs);
  AudioClip low = x, high = x;
  low.samples = dsp::filter({lp, lp}, x.samples);
  high.samples = dsp::filter({hp, hp}, x.samples);
  return {low, high};
}

AudioClip multiband_compressor(const AudioClip& x, const MultibandSettings& s) {
  auto [low, high] = crossover_lr4(x, s.crossover_hz);
  AudioClip low_c = compressor(low, s.low);
  AudioClip high_c = compressor(high, s.high);
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    y.samples[n] = low_c.samples[n] + high_c.samples[n];
  }
  return y;
}

}  // namespace tvfx::fx
