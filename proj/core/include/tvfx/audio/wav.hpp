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

#include "tvfx/audio/clip.hpp"

namespace tvfx {

enum class WavFormat {
  kPcm16,
  kFloat32,
};

/// Reads a RIFF/WAVE file (PCM 16-bit or IEEE float 32-bit, mono or
/// stereo). 16-bit samples are scaled by 1/32768.
AudioClip read_wav(const std::string& path);

/// Writes a clip. Samples outside [-1, 1] saturate with a logged warning.
void write_wav(const AudioClip& clip, const std::string& path,
               WavFormat format = WavFormat::kPcm16);

}  // namespace tvfx
