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
#include <utility>
#include <vector>

#include "tvfx/nn/tensor.hpp"

namespace tvfx::nn {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Binary container of named shaped double arrays, little-endian, exact
/// bit round-trip. Order is preserved.
using NamedTensors = std::vector<std::pair<std::string, Tensor>>;

void save_arrays(const std::string& path, const NamedTensors& arrays);
NamedTensors load_arrays(const std::string& path);

}  // namespace tvfx::nn
