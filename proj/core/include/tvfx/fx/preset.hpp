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

#include <map>
#include <string>
#include <vector>

#include "tvfx/audio/clip.hpp"
#include "tvfx/fx/lfo.hpp"

namespace tvfx::fx {

/// A reproducible effect configuration: which processor to run and with
/// what parameters. Presets are versioned and serialize to JSON so a
/// corpus records exactly how its wet files were produced.
struct Preset {
  std::string name;
  std::string effect;  // tremolo, vibrato, chorus, flanger, phaser,
                       // auto-wah-lfo, auto-wah-env, ring-mod,
                       // ring-mod-diode, leslie, compressor, multiband
  int version = 1;
  Lfo lfo;
  std::map<std::string, double> params;
  /// Modulation effects get peak-normalized wet files; time-invariant
  /// dynamics processors keep their natural output level.
  bool normalize_wet = true;
  /// When nonzero, a +gain dB overdrive is applied after the effect.
  double post_overdrive_db = 0.0;

  double param(const std::string& key, double fallback) const;
};

/// Renders the wet version of a dry mono clip.
AudioClip render_preset(const Preset& preset, const AudioClip& dry);

std::vector<std::string> builtin_preset_names();
bool is_builtin_preset(const std::string& name);
/// Looks up a built-in preset by name, or loads a preset JSON file if
/// `name` is a path to one.
Preset resolve_preset(const std::string& name);

std::string preset_to_json(const Preset& preset);
Preset preset_from_json(const std::string& text);
void save_preset(const Preset& preset, const std::string& path);
Preset load_preset(const std::string& path);

}  // namespace tvfx::fx
