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

#include "tvfx/fx/lfo.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx::fx {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

double Lfo::value(double t) const {
  double theta = kTwoPi * rate * t + phase;
  double wave = 0.0;
  switch (shape) {
    case LfoShape::kSine:
      wave = std::sin(theta);
      break;
    case LfoShape::kTriangle: {
      // Triangle matching sin's phase: 0 at theta=0, peak at pi/2.
      double frac = theta / kTwoPi - std::floor(theta / kTwoPi);
      wave = frac < 0.25   ? 4.0 * frac
             : frac < 0.75 ? 2.0 - 4.0 * frac
                           : 4.0 * frac - 4.0;
      break;
    }
  }
  return 0.5 + 0.5 * wave;
}

std::string to_string(LfoShape shape) {
  return shape == LfoShape::kSine ? "sine" : "triangle";
}

LfoShape lfo_shape_from_string(const std::string& s) {
  if (s == "sine") return LfoShape::kSine;
  if (s == "triangle") return LfoShape::kTriangle;
  fail(ErrorKind::kFormat, "unknown LFO shape: " + s);
}

}  // namespace tvfx::fx
