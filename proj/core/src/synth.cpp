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

#include "tvfx/fx/synth.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx::fx {

namespace {
constexpr int kRate = 16000;
constexpr double kTwoPi = 6.28318530717958647692;

AudioClip pluck(double f0, std::size_t n, std::uint64_t seed) {
  // Karplus-Strong: noise burst into a delay line with a two-point
  // averaging loss filter. Effective pitch is fs / (L + 0.5).
  std::size_t period = static_cast<std::size_t>(
      std::llround(static_cast<double>(kRate) / f0 - 0.5));
  period = std::max<std::size_t>(period, 2);
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(std::llround(f0 * 1000.0))));
  std::vector<double> line(period);
  for (auto& v : line) v = rng.uniform(-1.0, 1.0);
  std::vector<double> out(n);
  const double loss = 0.998;
  std::size_t head = 0;
  double prev = line[period - 1];
  for (std::size_t i = 0; i < n; ++i) {
    double cur = line[head];
    out[i] = cur;
    line[head] = loss * 0.5 * (cur + prev);
    prev = cur;
    head = (head + 1) % period;
  }
  return AudioClip(std::move(out), kRate, 1);
}

AudioClip tone(double f0, std::size_t n) {
  // Fixed 1/h harmonic spectrum below Nyquist.
  std::vector<double> out(n, 0.0);
  for (int h = 1; h <= 6; ++h) {
    double fh = f0 * h;
    if (fh >= kRate / 2.0) break;
    double amp = 1.0 / h;
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += amp * std::sin(kTwoPi * fh * static_cast<double>(i) / kRate);
    }
  }
  return AudioClip(std::move(out), kRate, 1);
}

}  // namespace

AudioClip synth_note(double f0, double duration_seconds, NoteKind kind,
                     std::uint64_t seed) {
  if (!(f0 >= 30.0 && f0 < kRate / 4.0)) {
    fail(ErrorKind::kUsage, "synth_note: f0 must be in [30, Nyquist/2)");
  }
  if (duration_seconds < 0.0) {
    fail(ErrorKind::kUsage, "synth_note: negative duration");
  }
  auto n = static_cast<std::size_t>(std::llround(duration_seconds * kRate));
  if (n == 0) return AudioClip({}, kRate, 1);
  return kind == NoteKind::kPluck ? pluck(f0, n, seed) : tone(f0, n);
}

NoteKind note_kind_from_string(const std::string& s) {
  if (s == "pluck") return NoteKind::kPluck;
  if (s == "tone") return NoteKind::kTone;
  fail(ErrorKind::kFormat, "unknown note kind: " + s);
}

std::string to_string(NoteKind kind) {
  return kind == NoteKind::kPluck ? "pluck" : "tone";
}

}  // namespace tvfx::fx
