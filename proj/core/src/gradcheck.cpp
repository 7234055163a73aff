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

#include "tvfx/nn/gradcheck.hpp"

#include <cmath>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {

double rel_error(double a, double n) {
  double denom = std::max({std::abs(a), std::abs(n), 1e-6});
  return std::abs(a - n) / denom;
}

}  // namespace

GradCheckReport gradient_check(GradCheckProblem problem, double eps) {
  if (!problem.build) fail(ErrorKind::kUsage, "gradient_check: missing build fn");

  auto evaluate = [&](const std::vector<Tensor>& inputs) {
    Tape tape;
    std::vector<Var> vars;
    vars.reserve(inputs.size());
    for (const auto& in : inputs) vars.push_back(tape.record(in));
    Var loss = problem.build(tape, vars);
    if (tape.value(loss).size() != 1) {
      fail(ErrorKind::kUsage, "gradient_check: build must return a scalar");
    }
    return tape.value(loss)[0];
  };

  // Analytic pass.
  std::vector<Tensor> input_grads;
  {
    if (problem.params != nullptr) problem.params->zero_grads();
    Tape tape;
    std::vector<Var> vars;
    for (const auto& in : problem.inputs) vars.push_back(tape.record(in));
    Var loss = problem.build(tape, vars);
    tape.backward(loss);
    for (Var v : vars) input_grads.push_back(tape.grad(v));
  }

  GradCheckReport report;
  auto consider = [&](double analytic, double numeric, const std::string& where) {
    double e = rel_error(analytic, numeric);
    if (e > report.max_rel_error) {
      report.max_rel_error = e;
      report.worst = where;
    }
  };

  // Inputs.
  for (std::size_t k = 0; k < problem.inputs.size(); ++k) {
    for (std::size_t i = 0; i < problem.inputs[k].size(); ++i) {
      double saved = problem.inputs[k][i];
      problem.inputs[k][i] = saved + eps;
      double up = evaluate(problem.inputs);
      problem.inputs[k][i] = saved - eps;
      double down = evaluate(problem.inputs);
      problem.inputs[k][i] = saved;
      consider(input_grads[k][i], (up - down) / (2.0 * eps),
               "input[" + std::to_string(k) + "][" + std::to_string(i) + "]");
    }
  }

  // Parameters.
  if (problem.params != nullptr) {
    for (auto& p : *problem.params) {
      if (!p.trainable) continue;
      for (std::size_t i = 0; i < p.value.size(); ++i) {
        double saved = p.value[i];
        p.value[i] = saved + eps;
        double up = evaluate(problem.inputs);
        p.value[i] = saved - eps;
        double down = evaluate(problem.inputs);
        p.value[i] = saved;
        consider(p.grad[i], (up - down) / (2.0 * eps),
                 p.name + "[" + std::to_string(i) + "]");
      }
    }
  }
  return report;
}

}  // namespace tvfx::nn
