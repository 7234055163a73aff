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

#include <functional>
#include <vector>

#include "tvfx/nn/tensor.hpp"

namespace tvfx::nn {

/// Handle to a tensor recorded on a Tape.
struct Var {
  std::size_t id = 0;
};

/// Reverse-mode record: ops append their saved activations as captured
/// state in a backward closure; backward() replays the closures in exact
/// reverse execution order. A tape is confined to one thread.
class Tape {
 public:
  Var record(Tensor value);
  void record_backward(std::function<void(Tape&)> fn);

  const Tensor& value(Var v) const { return values_[v.id]; }
  Tensor& value_mut(Var v) { return values_[v.id]; }
  /// Gradient buffer for v, allocated zeroed on first access.
  Tensor& grad(Var v);
  bool has_grad(Var v) const { return !grads_[v.id].empty(); }

  /// Seeds d(out)/d(out) = seed (or 1 for scalars) and runs all recorded
  /// closures in reverse. Parameter gradients accumulate into their
  /// Parameter::grad buffers.
  void backward(Var out);
  void backward(Var out, const Tensor& seed);

  std::size_t num_values() const { return values_.size(); }
  std::size_t num_ops() const { return ops_.size(); }

 private:
  std::vector<Tensor> values_;
  std::vector<Tensor> grads_;
  std::vector<std::function<void(Tape&)>> ops_;
};

}  // namespace tvfx::nn
