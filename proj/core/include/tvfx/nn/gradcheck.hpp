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
#include <string>
#include <vector>

#include "tvfx/nn/param.hpp"
#include "tvfx/nn/tape.hpp"

namespace tvfx::nn {

/// A differentiable scalar function of some input tensors and the
/// parameters in `params`. `build` must be a pure function of the current
/// input/parameter values: it is re-evaluated under perturbation.
struct GradCheckProblem {
  std::function<Var(Tape&, const std::vector<Var>&)> build;
  std::vector<Tensor> inputs;
  ParamStore* params = nullptr;
};

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::string worst;  // "input[k][i]" or parameter name with flat index
};

/// Compares reverse-mode gradients with central finite differences over
/// every input element and every trainable parameter element.
/// Relative error uses max(|analytic|, |numeric|, 1e-6) as denominator.
GradCheckReport gradient_check(GradCheckProblem problem, double eps = 1e-5);

}  // namespace tvfx::nn
