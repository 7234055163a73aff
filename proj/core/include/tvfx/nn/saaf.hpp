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

#include "tvfx/nn/param.hpp"
#include "tvfx/nn/tape.hpp"

namespace tvfx::nn {

/// Per-channel smooth adaptive activation: a C1 piecewise-quadratic
/// function on [lo, hi] built by twice-integrating a piecewise-constant
/// basis, plus a global affine part.
///
///   f_c(x) = intercept_c + slope_c * x + sum_j seg_c[j] * B_j(x)
///
/// where B_j is the double integral of the indicator of interval j: zero
/// left of the interval, quadratic inside, linear beyond. Outside
/// [lo, hi] the function continues linearly with the boundary slope.
///
/// segments: (channels, intervals); affine: (channels, 2) as
/// [intercept, slope]. x: (time, channels).
Var saaf(Tape& t, Var x, Parameter& segments, Parameter& affine,
         double lo = -1.0, double hi = 1.0);

/// Scalar evaluation used by oracle tests.
double saaf_eval(const double* seg, std::size_t intervals, double intercept,
                 double slope, double lo, double hi, double x);

}  // namespace tvfx::nn
