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

#include "tvfx/audio/clip.hpp"

namespace tvfx {

/// Band-limited rate conversion with a Kaiser-windowed sinc kernel
/// (64 taps at the lower of the two rates). Identity when the rates are
/// equal. Output length is round(n * target / source).
AudioClip resample(const AudioClip& clip, int target_rate);

}  // namespace tvfx
