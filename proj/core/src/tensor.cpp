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

#include "tvfx/nn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {
std::size_t shape_product(const std::vector<std::size_t>& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         std::multiplies<>());
}
}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), v_(shape_product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), v_(std::move(values)) {
  if (shape_product(shape_) != v_.size()) {
    fail(ErrorKind::kUsage, "Tensor: shape does not match value count");
  }
}

Tensor Tensor::full(std::vector<std::size_t> shape, double v) {
  Tensor t(std::move(shape));
  t.fill(v);
  return t;
}

void Tensor::fill(double v) { std::fill(v_.begin(), v_.end(), v); }

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const {
  if (shape_product(shape) != v_.size()) {
    fail(ErrorKind::kUsage, "Tensor::reshaped: element count mismatch");
  }
  return Tensor(std::move(shape), v_);
}

bool Tensor::all_finite() const {
  for (double v : v_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::add(const Tensor& other) {
  if (!same_shape(other)) fail(ErrorKind::kUsage, "Tensor::add: shape mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += other.v_[i];
}

void Tensor::scale(double s) {
  for (auto& v : v_) v *= s;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.shape() == b.shape() && a.values() == b.values();
}

std::string shape_string(const Tensor& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t.dim(i));
  }
  s += ")";
  return s;
}

}  // namespace tvfx::nn
