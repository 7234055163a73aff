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

#include <cstdint>
#include <string>

#include "tvfx/audio/clip.hpp"

namespace tvfx::fx {

enum class NoteKind {
  kPluck,  // Karplus-Strong string
  kTone,   // fixed-spectrum harmonic oscillator
};

/// Synthesizes a test note at 16 kHz. f0 must be in [30, Nyquist/2).
/// Plucks are seeded deterministically from (f0, seed).
AudioClip synth_note(double f0, double duration_seconds, NoteKind kind,
                     std::uint64_t seed = 0);

NoteKind note_kind_from_string(const std::string& s);
std::string to_string(NoteKind kind);

}  // namespace tvfx::fx
