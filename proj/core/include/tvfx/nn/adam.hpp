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

namespace tvfx::nn {

/// Adam with bias correction; first/second moments persist per parameter
/// (aligned with the store's registration order). Non-trainable
/// parameters are skipped.
class Adam {
 public:
  explicit Adam(double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
      : beta1_(beta1), beta2_(beta2), eps_(eps) {}

  /// Applies one update from the accumulated gradients (does not zero them).
  void step(ParamStore& params, double lr);

  std::uint64_t steps_taken() const { return t_; }
  std::vector<Tensor>& first_moments() { return m_; }
  std::vector<Tensor>& second_moments() { return v_; }
  /// Restores optimizer state (for checkpoint resume).
  void restore(std::vector<Tensor> m, std::vector<Tensor> v, std::uint64_t t);

 private:
  void ensure_init(const ParamStore& params);

  double beta1_, beta2_, eps_;
  std::uint64_t t_ = 0;
  std::vector<Tensor> m_, v_;
};

}  // namespace tvfx::nn
