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

#include <deque>
#include <string>
#include <vector>

#include "tvfx/nn/tensor.hpp"

namespace tvfx::nn {

/// A trainable array: value plus a gradient accumulator of the same
/// shape. Gradients are zeroed between optimizer steps.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;
  bool trainable = true;

  Parameter(std::string n, Tensor v, bool t = true)
      : name(std::move(n)), value(std::move(v)), grad(value.shape()), trainable(t) {}
};

/// Owns parameters in a stable registration order (checkpoints and the
/// optimizer index by position).
class ParamStore {
 public:
  Parameter& add(const std::string& name, std::vector<std::size_t> shape,
                 bool trainable = true);
  std::size_t size() const { return params_.size(); }
  Parameter& operator[](std::size_t i) { return params_[i]; }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }
  Parameter* find(const std::string& name);
  const Parameter* find(const std::string& name) const;

  void zero_grads();
  /// Number of trainable scalar values.
  std::size_t trainable_count() const;
  bool grads_all_finite() const;

  std::vector<Tensor> snapshot_values() const;
  void restore_values(const std::vector<Tensor>& values);

  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::deque<Parameter> params_;  // deque: stable references on growth
};

}  // namespace tvfx::nn
