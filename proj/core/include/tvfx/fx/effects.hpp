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

#include <vector>

#include "tvfx/audio/clip.hpp"
#include "tvfx/fx/lfo.hpp"

namespace tvfx::fx {

/// Amplitude modulation: y(t) = x(t) * ((1 - depth) + depth * lfo(t)).
AudioClip tremolo(const AudioClip& x, const Lfo& lfo);

/// Modulated delay line, cubic fractional-delay interpolation:
/// y(t) = x(t - max_delay * lfo(t)).
AudioClip vibrato(const AudioClip& x, const Lfo& lfo, double max_delay);

/// Mixes delayed, pitch-modulated copies with the dry signal:
/// y = (1 - mix) x + (mix / voices) * sum of modulated voices. Voice v
/// reads at base_delays[v] + depth_seconds * (lfo_v(t) - 0.5) * 2.
AudioClip chorus(const AudioClip& x, const std::vector<Lfo>& lfos,
                 const std::vector<double>& base_delays, double depth_seconds,
                 double mix);

/// Modulated comb filter: y = (1 - mix) x + mix * x(t - d(t)), with d
/// sweeping [min_delay, max_delay] under the LFO.
AudioClip flanger(const AudioClip& x, const Lfo& lfo, double min_delay,
                  double max_delay, double mix);

/// Cascade of first-order all-pass sections whose break frequency follows
/// the LFO log-spaced between f_min and f_max; output mixed with input.
AudioClip phaser(const AudioClip& x, int stages, const Lfo& lfo, double f_min,
                 double f_max, double mix);

/// Break-frequency trajectory used by phaser (exposed for oracle tests).
double phaser_break_frequency(const Lfo& lfo, double f_min, double f_max,
                              double t);

/// State-variable band-pass filter swept 500 Hz..3 kHz by a 5 Hz sine.
AudioClip auto_wah_lfo(const AudioClip& x);
/// Same filter driven by an attack/release envelope follower.
AudioClip auto_wah_env(const AudioClip& x);

/// One-pole attack/release follower over |x| (exposed for oracle tests).
std::vector<double> envelope_follower(const std::vector<double>& x,
                                      double attack_seconds,
                                      double release_seconds, int sample_rate);

/// Carrier multiplication; with diode enabled the carrier/input pass
/// through a bridge of four identical static diode curves instead.
AudioClip ring_modulator(const AudioClip& x, double mod_rate, bool diode);

/// The diode curve used by ring_modulator (exposed for oracle tests).
double diode_curve(double v);

struct LesliePreset {
  double rotor_hz = 7.0;          // fast rotor
  double doppler_seconds = 5e-4;  // peak delay deviation
  double am_depth = 0.35;
  double channel_phase = 3.14159265358979323846;  // right-channel offset
};

/// Rotating-horn emulation: per channel a Doppler delay plus synchronized
/// amplitude modulation; channels differ by the configured modulator phase.
AudioClip leslie(const AudioClip& x, const LesliePreset& preset = {});

/// Normalized tanh waveshaper: y = tanh(g x) / tanh(g), g = 10^(dB/20).
AudioClip overdrive(const AudioClip& x, double gain_db);

}  // namespace tvfx::fx
