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

#include "tvfx/nn/adam.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx::nn {

void Adam::ensure_init(const ParamStore& params) {
  if (!m_.empty()) {
    if (m_.size() != params.size()) {
      fail(ErrorKind::kState, "Adam: parameter count changed under the optimizer");
    }
    return;
  }
  m_.reserve(params.size());
  v_.reserve(params.size());
  for (const auto& p : params) {
    m_.emplace_back(p.value.shape());
    v_.emplace_back(p.value.shape());
  }
}

void Adam::step(ParamStore& params, double lr) {
  ensure_init(params);
  ++t_;
  double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    Parameter& p = params[i];
    if (!p.trainable) continue;
    Tensor& m = m_[i];
    Tensor& v = v_[i];
    for (std::size_t k = 0; k < p.value.size(); ++k) {
      double g = p.grad[k];
      m[k] = beta1_ * m[k] + (1.0 - beta1_) * g;
      v[k] = beta2_ * v[k] + (1.0 - beta2_) * g * g;
      double mhat = m[k] / bc1;
      double vhat = v[k] / bc2;
      p.value[k] -= lr * mhat / (std::sqrt(vhat) + eps_);
    }
  }
}

void Adam::restore(std::vector<Tensor> m, std::vector<Tensor> v,
                   std::uint64_t t) {
  if (m.size() != v.size()) fail(ErrorKind::kState, "Adam::restore: moment count mismatch");
  m_ = std::move(m);
  v_ = std::move(v);
  t_ = t;
}

}  // namespace tvfx::nn
