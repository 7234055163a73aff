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

#include "tvfx/fx/preset.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tvfx/common.hpp"
#include "tvfx/fx/dynamics.hpp"
#include "tvfx/fx/effects.hpp"

namespace tvfx::fx {

using nlohmann::json;

double Preset::param(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

Preset make(const std::string& name, const std::string& effect, Lfo lfo,
            std::map<std::string, double> params, bool normalize_wet = true,
            double od_db = 0.0) {
  Preset p;
  p.name = name;
  p.effect = effect;
  p.lfo = lfo;
  p.params = std::move(params);
  p.normalize_wet = normalize_wet;
  p.post_overdrive_db = od_db;
  return p;
}

std::vector<Preset> make_builtins() {
  std::vector<Preset> out;
  out.push_back(make("tremolo", "tremolo", {LfoShape::kSine, 2.0, 0.5, 0.0}, {}));
  out.push_back(make("vibrato", "vibrato", {LfoShape::kSine, 2.0, 1.0, 0.0},
                     {{"max_delay", 2.5e-3}}));
  out.push_back(make("chorus", "chorus", {LfoShape::kSine, 1.5, 1.0, 0.0},
                     {{"voices", 2},
                      {"base_delay_0", 0.020},
                      {"base_delay_1", 0.025},
                      {"rate_1", 2.0},
                      {"phase_1", kPi / 2.0},
                      {"depth_seconds", 1.5e-3},
                      {"mix", 0.5}}));
  out.push_back(make("flanger", "flanger", {LfoShape::kSine, 0.5, 1.0, 0.0},
                     {{"min_delay", 1e-3}, {"max_delay", 7e-3}, {"mix", 0.5}}));
  out.push_back(make("phaser", "phaser", {LfoShape::kSine, 0.8, 1.0, 0.0},
                     {{"stages", 4}, {"f_min", 300.0}, {"f_max", 1800.0},
                      {"mix", 0.5}}));
  out.push_back(make("auto-wah-lfo", "auto-wah-lfo", {LfoShape::kSine, 5.0, 1.0, 0.0}, {}));
  out.push_back(make("auto-wah-env", "auto-wah-env", {}, {}, false));
  out.push_back(make("ring-mod", "ring-mod", {}, {{"mod_rate", 5.0}}));
  out.push_back(make("ring-mod-diode", "ring-mod-diode", {}, {{"mod_rate", 5.0}}));
  out.push_back(make("leslie", "leslie", {},
                     {{"rotor_hz", 7.0},
                      {"doppler_seconds", 5e-4},
                      {"am_depth", 0.35},
                      {"channel_phase", kPi},
                      {"channel", 0}}));
  out.push_back(make("compressor", "compressor", {},
                     {{"attack", 0.010}, {"release", 0.100}, {"knee", 1.0},
                      {"ratio", 4.0}, {"threshold", -40.0}},
                     false));
  out.push_back(make("multiband", "multiband", {},
                     {{"crossover", 500.0}}, false));
  // Nonlinear variants: the same modulation effects driven into a +10 dB
  // overdrive.
  for (const char* base : {"tremolo", "vibrato", "chorus", "flanger", "phaser"}) {
    for (const auto& p : out) {
      if (p.name == base) {
        Preset od = p;
        od.name = std::string(base) + "-od";
        od.post_overdrive_db = 10.0;
        out.push_back(od);
        break;
      }
    }
  }
  return out;
}

const std::vector<Preset>& builtins() {
  static const std::vector<Preset> presets = make_builtins();
  return presets;
}

}  // namespace

std::vector<std::string> builtin_preset_names() {
  std::vector<std::string> names;
  for (const auto& p : builtins()) names.push_back(p.name);
  return names;
}

bool is_builtin_preset(const std::string& name) {
  for (const auto& p : builtins()) {
    if (p.name == name) return true;
  }
  return false;
}

Preset resolve_preset(const std::string& name) {
  for (const auto& p : builtins()) {
    if (p.name == name) return p;
  }
  if (std::filesystem::exists(name)) return load_preset(name);
  fail(ErrorKind::kUsage, "unknown preset (and no such file): " + name);
}

AudioClip render_preset(const Preset& preset, const AudioClip& dry) {
  AudioClip wet;
  const auto& e = preset.effect;
  if (e == "tremolo") {
    wet = tremolo(dry, preset.lfo);
  } else if (e == "vibrato") {
    wet = vibrato(dry, preset.lfo, preset.param("max_delay", 2.5e-3));
  } else if (e == "chorus") {
    int voices = static_cast<int>(preset.param("voices", 2));
    std::vector<Lfo> lfos;
    std::vector<double> delays;
    for (int v = 0; v < voices; ++v) {
      Lfo l = preset.lfo;
      l.rate = preset.param("rate_" + std::to_string(v), preset.lfo.rate);
      l.phase = preset.param("phase_" + std::to_string(v), preset.lfo.phase);
      lfos.push_back(l);
      delays.push_back(preset.param("base_delay_" + std::to_string(v), 0.020));
    }
    wet = chorus(dry, lfos, delays, preset.param("depth_seconds", 1.5e-3),
                 preset.param("mix", 0.5));
  } else if (e == "flanger") {
    wet = flanger(dry, preset.lfo, preset.param("min_delay", 1e-3),
                  preset.param("max_delay", 7e-3), preset.param("mix", 0.5));
  } else if (e == "phaser") {
    wet = phaser(dry, static_cast<int>(preset.param("stages", 4)), preset.lfo,
                 preset.param("f_min", 300.0), preset.param("f_max", 1800.0),
                 preset.param("mix", 0.5));
  } else if (e == "auto-wah-lfo") {
    wet = auto_wah_lfo(dry);
  } else if (e == "auto-wah-env") {
    wet = auto_wah_env(dry);
  } else if (e == "ring-mod") {
    wet = ring_modulator(dry, preset.param("mod_rate", 5.0), false);
  } else if (e == "ring-mod-diode") {
    wet = ring_modulator(dry, preset.param("mod_rate", 5.0), true);
  } else if (e == "leslie") {
    LesliePreset lp;
    lp.rotor_hz = preset.param("rotor_hz", lp.rotor_hz);
    lp.doppler_seconds = preset.param("doppler_seconds", lp.doppler_seconds);
    lp.am_depth = preset.param("am_depth", lp.am_depth);
    lp.channel_phase = preset.param("channel_phase", lp.channel_phase);
    wet = leslie(dry, lp).channel(static_cast<int>(preset.param("channel", 0)));
  } else if (e == "compressor") {
    CompressorSettings s;
    s.attack = preset.param("attack", s.attack);
    s.release = preset.param("release", s.release);
    s.knee_db = preset.param("knee", s.knee_db);
    s.ratio = preset.param("ratio", s.ratio);
    s.threshold_db = preset.param("threshold", s.threshold_db);
    wet = compressor(dry, s);
  } else if (e == "multiband") {
    MultibandSettings s;
    s.crossover_hz = preset.param("crossover", s.crossover_hz);
    wet = multiband_compressor(dry, s);
  } else {
    fail(ErrorKind::kFormat, "unknown effect in preset: " + e);
  }
  if (preset.post_overdrive_db != 0.0) {
    wet = overdrive(wet, preset.post_overdrive_db);
  }
  return wet;
}

std::string preset_to_json(const Preset& p) {
  json j;
  j["name"] = p.name;
  j["effect"] = p.effect;
  j["version"] = p.version;
  j["lfo"] = {{"shape", to_string(p.lfo.shape)},
              {"rate", p.lfo.rate},
              {"depth", p.lfo.depth},
              {"phase", p.lfo.phase}};
  j["params"] = p.params;
  j["normalize_wet"] = p.normalize_wet;
  j["post_overdrive_db"] = p.post_overdrive_db;
  return j.dump(2) + "\n";
}

Preset preset_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kFormat, std::string("preset JSON parse error: ") + e.what());
  }
  try {
    Preset p;
    p.name = j.at("name").get<std::string>();
    p.effect = j.at("effect").get<std::string>();
    p.version = j.value("version", 1);
    if (j.contains("lfo")) {
      const auto& l = j["lfo"];
      p.lfo.shape = lfo_shape_from_string(l.value("shape", "sine"));
      p.lfo.rate = l.value("rate", 2.0);
      p.lfo.depth = l.value("depth", 1.0);
      p.lfo.phase = l.value("phase", 0.0);
    }
    if (j.contains("params")) {
      p.params = j["params"].get<std::map<std::string, double>>();
    }
    p.normalize_wet = j.value("normalize_wet", true);
    p.post_overdrive_db = j.value("post_overdrive_db", 0.0);
    return p;
  } catch (const json::exception& e) {
    fail(ErrorKind::kFormat, std::string("preset JSON invalid: ") + e.what());
  }
}

void save_preset(const Preset& preset, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kIo, "cannot write preset: " + path);
  out << preset_to_json(preset);
}

Preset load_preset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot read preset: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return preset_from_json(text);
}

}  // namespace tvfx::fx
