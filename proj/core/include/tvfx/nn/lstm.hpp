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

#include "tvfx/nn/ops.hpp"
#include "tvfx/nn/param.hpp"
#include "tvfx/nn/tape.hpp"

namespace tvfx::nn {

/// One recurrence direction. Gate blocks are ordered i, f, g, o along the
/// last axis: wx (input, 4 units), wh (units, 4 units), b (4 units).
struct LstmDirection {
  Parameter* wx = nullptr;
  Parameter* wh = nullptr;
  Parameter* b = nullptr;
};

struct BiLstmSpec {
  LstmDirection forward;
  LstmDirection backward;
  std::size_t units = 0;
  /// Candidate and cell-output activation (tanh for the first two layers,
  /// identity for the last, whose nonlinearity is the SAAF).
  Act cell_activation = Act::kTanh;
  double dropout = 0.0;            // input connections
  double recurrent_dropout = 0.0;  // recurrent connections
  bool training = false;
  std::uint64_t mask_seed = 0;     // per-call mask stream
};

/// Bidirectional LSTM over x (steps, features) -> (steps, 2 units):
/// the forward pass runs t = 0..S-1, the backward pass runs the reversed
/// sequence, and the per-step outputs are concatenated [fwd, bwd].
/// Dropout masks (one per direction, fixed across steps) apply to input
/// and recurrent connections only while training.
Var bilstm(Tape& t, Var x, const BiLstmSpec& spec);

}  // namespace tvfx::nn
