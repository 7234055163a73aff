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
#include <vector>

#include "tvfx/nn/param.hpp"
#include "tvfx/nn/tape.hpp"

namespace tvfx::nn {

enum class Act { kAbs, kSoftplus, kTanh, kRelu, kSigmoid, kIdentity };

// All 2-d tensors below are time-major: (time, channels).

/// Cross-correlation of a single-channel signal (time) or (time, 1) with
/// W (filters, width); zero 'same' padding, stride 1 -> (time, filters).
Var conv1d(Tape& t, Var x, Parameter& w);

/// Channel-wise convolution: output channel c is input channel c
/// convolved with kernel row c of W (channels, width). Same padding.
Var conv1d_local(Tape& t, Var x, Parameter& w);

/// Adjoint of conv1d with the same kernel: (time, filters) -> (time, 1).
/// Not trainable: no gradient flows to W through this op.
Var conv1d_transposed_tied(Tape& t, Var x, const Parameter& w);

struct PoolIndices {
  std::size_t window = 0;
  std::vector<std::size_t> argmax;  // flat (time/window, channels) -> source time
};

/// Non-overlapping max pooling over time; records argmax positions
/// (earliest index wins ties).
Var max_pool_indexed(Tape& t, Var x, std::size_t window, PoolIndices* indices);

/// Scatters pooled values back to their recorded positions, zeros elsewhere.
Var unpool_indices(Tape& t, Var z, const PoolIndices& indices, std::size_t out_time);

/// Endpoint-aligned per-channel linear interpolation from (s, c) to
/// (out_time, c).
Var unpool_interpolate(Tape& t, Var z, std::size_t out_time);

/// Affine map along channels at every time step: y = x W + b,
/// W (in, out), b (out).
Var dense(Tape& t, Var x, Parameter& w, Parameter& b);

/// Elementwise activation.
Var activation(Tape& t, Var x, Act kind);

/// y = a + b (same shape).
Var add(Tape& t, Var a, Var b);
/// y = a * b elementwise (same shape).
Var multiply(Tape& t, Var a, Var b);
/// Mean of |x| over time per channel: (time, c) -> (1, c).
Var abs_mean_over_time(Tape& t, Var x);
/// Scales each channel of x (time, c) by s (1, c).
Var scale_channels(Tape& t, Var x, Var s);

/// Squeeze-and-excitation gate: x * sigmoid(W2 relu(W1 mean_t|x| + b1) + b2).
Var se_block(Tape& t, Var x, Parameter& w1, Parameter& b1, Parameter& w2,
             Parameter& b2);

/// Concatenates per-frame pooled maps (each (s, c)) into a latent
/// sequence (s, frames * c), frame-major feature order.
Var concat_channels(Tape& t, const std::vector<Var>& frames);

/// Mean absolute error against a fixed target; returns a scalar (1,) Var.
Var mae_loss(Tape& t, Var output, const Tensor& target);

/// Sum of scalar losses, scaled: (sum loss_i) * scale.
Var scale_sum(Tape& t, const std::vector<Var>& scalars, double scale);

/// Adds lambda * sum(p^2) of a parameter to a scalar loss.
Var add_l2_penalty(Tape& t, Var loss, Parameter& p, double lambda);

}  // namespace tvfx::nn
