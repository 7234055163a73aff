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

#include "tvfx/fx/effects.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx::fx {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

void require_mono(const AudioClip& x, const char* op) {
  if (!x.mono()) fail(ErrorKind::kUsage, std::string(op) + ": input must be mono");
}

// 4-point cubic (Catmull-Rom) read at fractional index; zero outside.
double read_cubic(const std::vector<double>& x, double pos) {
  double fidx = std::floor(pos);
  long long i = static_cast<long long>(fidx);
  double f = pos - fidx;
  auto sample = [&](long long idx) -> double {
    return (idx >= 0 && idx < static_cast<long long>(x.size()))
               ? x[static_cast<std::size_t>(idx)]
               : 0.0;
  };
  double y0 = sample(i - 1), y1 = sample(i), y2 = sample(i + 1), y3 = sample(i + 2);
  double a = -0.5 * y0 + 1.5 * y1 - 1.5 * y2 + 0.5 * y3;
  double b = y0 - 2.5 * y1 + 2.0 * y2 - 0.5 * y3;
  double c = -0.5 * y0 + 0.5 * y2;
  return ((a * f + b) * f + c) * f + y1;
}

}  // namespace

AudioClip tremolo(const AudioClip& x, const Lfo& lfo) {
  require_mono(x, "tremolo");
  AudioClip y = x;
  double fs = x.sample_rate;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double t = static_cast<double>(n) / fs;
    y.samples[n] *= (1.0 - lfo.depth) + lfo.depth * lfo.value(t);
  }
  return y;
}

AudioClip vibrato(const AudioClip& x, const Lfo& lfo, double max_delay) {
  require_mono(x, "vibrato");
  double fs = x.sample_rate;
  if (max_delay < 1.0 / fs) {
    fail(ErrorKind::kUsage, "vibrato: max_delay below one sample period");
  }
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double t = static_cast<double>(n) / fs;
    double delay = max_delay * (0.5 + lfo.depth * (lfo.value(t) - 0.5));
    y.samples[n] = read_cubic(x.samples, static_cast<double>(n) - delay * fs);
  }
  return y;
}

AudioClip chorus(const AudioClip& x, const std::vector<Lfo>& lfos,
                 const std::vector<double>& base_delays, double depth_seconds,
                 double mix) {
  require_mono(x, "chorus");
  if (lfos.empty() || lfos.size() != base_delays.size()) {
    fail(ErrorKind::kUsage, "chorus: need one LFO per voice");
  }
  double fs = x.sample_rate;
  std::size_t voices = lfos.size();
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double t = static_cast<double>(n) / fs;
    double wet = 0.0;
    for (std::size_t v = 0; v < voices; ++v) {
      double delay =
          base_delays[v] + depth_seconds * (lfos[v].value(t) - 0.5) * 2.0;
      wet += read_cubic(x.samples, static_cast<double>(n) - delay * fs);
    }
    y.samples[n] = (1.0 - mix) * x.samples[n] +
                   mix / static_cast<double>(voices) * wet;
  }
  return y;
}

AudioClip flanger(const AudioClip& x, const Lfo& lfo, double min_delay,
                  double max_delay, double mix) {
  require_mono(x, "flanger");
  if (!(0.0 < min_delay && min_delay < max_delay)) {
    fail(ErrorKind::kUsage, "flanger: need 0 < min_delay < max_delay");
  }
  double fs = x.sample_rate;
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double t = static_cast<double>(n) / fs;
    double delay = min_delay + (max_delay - min_delay) * lfo.value(t);
    y.samples[n] = (1.0 - mix) * x.samples[n] +
                   mix * read_cubic(x.samples, static_cast<double>(n) - delay * fs);
  }
  return y;
}

double phaser_break_frequency(const Lfo& lfo, double f_min, double f_max,
                              double t) {
  return f_min * std::pow(f_max / f_min, lfo.value(t));
}

AudioClip phaser(const AudioClip& x, int stages, const Lfo& lfo, double f_min,
                 double f_max, double mix) {
  require_mono(x, "phaser");
  if (stages <= 0 || stages % 2 != 0) {
    fail(ErrorKind::kUsage, "phaser: stages must be even and positive");
  }
  double fs = x.sample_rate;
  if (!(0.0 < f_min && f_min < f_max && f_max < fs / 2.0)) {
    fail(ErrorKind::kUsage, "phaser: need 0 < f_min < f_max < Nyquist");
  }
  // First-order all-pass sections y[n] = a x[n] + x[n-1] - a y[n-1],
  // break frequency where the phase crosses -pi/2.
  std::vector<double> sx(stages, 0.0), sy(stages, 0.0);
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double t = static_cast<double>(n) / fs;
    double fb = phaser_break_frequency(lfo, f_min, f_max, t);
    double tan_half = std::tan(kPi * fb / fs);
    double a = (tan_half - 1.0) / (tan_half + 1.0);
    double v = x.samples[n];
    for (int s = 0; s < stages; ++s) {
      double out = a * v + sx[s] - a * sy[s];
      sx[s] = v;
      sy[s] = out;
      v = out;
    }
    y.samples[n] = (1.0 - mix) * x.samples[n] + mix * v;
  }
  return y;
}

std::vector<double> envelope_follower(const std::vector<double>& x,
                                      double attack_seconds,
                                      double release_seconds, int sample_rate) {
  std::vector<double> env(x.size(), 0.0);
  double fs = sample_rate;
  double ca = 1.0 - std::exp(-1.0 / (fs * attack_seconds));
  double cr = 1.0 - std::exp(-1.0 / (fs * release_seconds));
  double state = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double level = std::abs(x[n]);
    state += (level - state) * (level > state ? ca : cr);
    env[n] = state;
  }
  return env;
}

namespace {

// Chamberlin state-variable filter, band-pass output scaled to unit peak
// gain; the center frequency is updated per sample.
AudioClip swept_bandpass(const AudioClip& x,
                         const std::vector<double>& center_hz, double q) {
  double fs = x.sample_rate;
  double damp = 1.0 / q;
  double lp = 0.0, bp = 0.0;
  AudioClip y = x;
  for (std::size_t n = 0; n < x.samples.size(); ++n) {
    double f = 2.0 * std::sin(kPi * center_hz[n] / fs);
    lp += f * bp;
    double hp = x.samples[n] - lp - damp * bp;
    bp += f * hp;
    y.samples[n] = bp * damp;  // peak gain of bp is q; normalize to 1
  }
  return y;
}

constexpr double kWahLow = 500.0;
constexpr double kWahHigh = 3000.0;
constexpr double kWahQ = 2.0;

}  // namespace

AudioClip auto_wah_lfo(const AudioClip& x) {
  require_mono(x, "auto_wah_lfo");
  Lfo lfo{LfoShape::kSine, 5.0, 1.0, 0.0};
  double fs = x.sample_rate;
  std::vector<double> center(x.samples.size());
  for (std::size_t n = 0; n < center.size(); ++n) {
    center[n] = kWahLow + (kWahHigh - kWahLow) * lfo.value(n / fs);
  }
  return swept_bandpass(x, center, kWahQ);
}

AudioClip auto_wah_env(const AudioClip& x) {
  require_mono(x, "auto_wah_env");
  auto env = envelope_follower(x.samples, 0.005, 0.060, x.sample_rate);
  const double gain = 1.5;
  std::vector<double> center(env.size());
  for (std::size_t n = 0; n < env.size(); ++n) {
    double drive = std::min(1.0, env[n] * gain);
    center[n] = kWahLow + (kWahHigh - kWahLow) * drive;
  }
  return swept_bandpass(x, center, kWahQ);
}

double diode_curve(double v) {
  // Piecewise static diode: off below vb, quadratic knee to vl, linear above.
  constexpr double vb = 0.2;
  constexpr double vl = 0.4;
  if (v <= vb) return 0.0;
  if (v <= vl) return (v - vb) * (v - vb) / (2.0 * (vl - vb));
  return v - vl + (vl - vb) / 2.0;
}

AudioClip ring_modulator(const AudioClip& x, double mod_rate, bool diode) {
  require_mono(x, "ring_modulator");
  if (mod_rate <= 0.0) fail(ErrorKind::kUsage, "ring_modulator: mod_rate must be > 0");
  double fs = x.sample_rate;
  AudioClip y = x;
  for (std::size_t n = 0; n < y.samples.size(); ++n) {
    double carrier = std::sin(kTwoPi * mod_rate * static_cast<double>(n) / fs);
    if (!diode) {
      y.samples[n] = x.samples[n] * carrier;
    } else {
      // Bridge of four identical diodes: the two half-secondary signals
      // carrier +/- x/2 each drive an opposed diode pair.
      double top = carrier + 0.5 * x.samples[n];
      double bottom = carrier - 0.5 * x.samples[n];
      double plus = diode_curve(top) - diode_curve(-top);
      double minus = diode_curve(bottom) - diode_curve(-bottom);
      y.samples[n] = plus - minus;
    }
  }
  return y;
}

AudioClip leslie(const AudioClip& x, const LesliePreset& preset) {
  require_mono(x, "leslie");
  double fs = x.sample_rate;
  auto render_channel = [&](double phase) {
    std::vector<double> out(x.samples.size());
    double base = preset.doppler_seconds * 1.5;  // keep the read causal
    for (std::size_t n = 0; n < out.size(); ++n) {
      double theta = kTwoPi * preset.rotor_hz * static_cast<double>(n) / fs + phase;
      double delay = base + preset.doppler_seconds * std::sin(theta);
      double am = 1.0 - preset.am_depth * (0.5 + 0.5 * std::cos(theta));
      out[n] = am * read_cubic(x.samples, static_cast<double>(n) - delay * fs);
    }
    return AudioClip(std::move(out), x.sample_rate, 1);
  };
  return AudioClip::stereo(render_channel(0.0), render_channel(preset.channel_phase));
}

AudioClip overdrive(const AudioClip& x, double gain_db) {
  double g = std::pow(10.0, gain_db / 20.0);
  double norm = std::tanh(g);
  AudioClip y = x;
  for (auto& v : y.samples) v = std::tanh(g * v) / norm;
  return y;
}

}  // namespace tvfx::fx
