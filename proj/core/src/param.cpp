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

#include "tvfx/nn/param.hpp"

#include "tvfx/common.hpp"

namespace tvfx::nn {

Parameter& ParamStore::add(const std::string& name,
                           std::vector<std::size_t> shape, bool trainable) {
  if (find(name) != nullptr) {
    fail(ErrorKind::kUsage, "ParamStore::add: duplicate parameter " + name);
  }
  params_.emplace_back(name, Tensor(std::move(shape)), trainable);
  return params_.back();
}

Parameter* ParamStore::find(const std::string& name) {
  for (auto& p : params_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const Parameter* ParamStore::find(const std::string& name) const {
  for (const auto& p : params_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void ParamStore::zero_grads() {
  for (auto& p : params_) p.grad.zero();
}

std::size_t ParamStore::trainable_count() const {
  std::size_t n = 0;
  for (const auto& p : params_) {
    if (p.trainable) n += p.value.size();
  }
  return n;
}

bool ParamStore::grads_all_finite() const {
  for (const auto& p : params_) {
    if (!p.grad.all_finite()) return false;
  }
  return true;
}

std::vector<Tensor> ParamStore::snapshot_values() const {
  std::vector<Tensor> out;
  out.reserve(params_.size());
  for (const auto& p : params_) out.push_back(p.value);
  return out;
}

void ParamStore::restore_values(const std::vector<Tensor>& values) {
  if (values.size() != params_.size()) {
    fail(ErrorKind::kUsage, "ParamStore::restore_values: count mismatch");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].same_shape(params_[i].value)) {
      fail(ErrorKind::kUsage, "ParamStore::restore_values: shape mismatch");
    }
    params_[i].value = values[i];
  }
}

}  // namespace tvfx::nn
