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

#include <string>

namespace tvfx::fx {

enum class LfoShape { kSine, kTriangle };

/// Low-frequency oscillator with a unipolar output convention:
/// value(t) = 0.5 + 0.5 * waveform(2 pi rate t + phase), in [0, 1].
/// rate == 0 freezes the oscillator at its phase value.
struct Lfo {
  LfoShape shape = LfoShape::kSine;
  double rate = 2.0;    // Hz
  double depth = 1.0;   // [0, 1]; interpreted by each effect
  double phase = 0.0;   // radians

  double value(double t) const;
};

std::string to_string(LfoShape shape);
LfoShape lfo_shape_from_string(const std::string& s);

}  // namespace tvfx::fx
