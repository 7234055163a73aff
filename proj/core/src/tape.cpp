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

#include "tvfx/nn/tape.hpp"

#include "tvfx/common.hpp"

namespace tvfx::nn {

Var Tape::record(Tensor value) {
  values_.push_back(std::move(value));
  grads_.emplace_back();
  return Var{values_.size() - 1};
}

void Tape::record_backward(std::function<void(Tape&)> fn) {
  ops_.push_back(std::move(fn));
}

Tensor& Tape::grad(Var v) {
  if (grads_[v.id].empty() && !values_[v.id].empty()) {
    grads_[v.id] = Tensor(values_[v.id].shape());
  }
  return grads_[v.id];
}

void Tape::backward(Var out) {
  if (value(out).size() != 1) {
    fail(ErrorKind::kUsage, "Tape::backward: output is not scalar; pass a seed");
  }
  Tensor seed({1});
  seed[0] = 1.0;
  backward(out, seed);
}

void Tape::backward(Var out, const Tensor& seed) {
  if (!seed.same_shape(value(out))) {
    fail(ErrorKind::kUsage, "Tape::backward: seed shape mismatch");
  }
  grad(out) = seed;
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    (*it)(*this);
  }
}

}  // namespace tvfx::nn
