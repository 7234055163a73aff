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

#include "tvfx/nn/saaf.hpp"

#include <cmath>
#include <memory>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {

// Interval index for x: -1 below lo, J at/above hi, else floor((x-lo)/h).
long long interval_of(double x, double lo, double hi, double h, std::size_t j_count) {
  if (x < lo) return -1;
  if (x >= hi) return static_cast<long long>(j_count);
  auto m = static_cast<long long>((x - lo) / h);
  if (m >= static_cast<long long>(j_count)) m = static_cast<long long>(j_count) - 1;
  return m;
}

}  // namespace

double saaf_eval(const double* seg, std::size_t intervals, double intercept,
                 double slope, double lo, double hi, double x) {
  double h = (hi - lo) / static_cast<double>(intervals);
  long long m = interval_of(x, lo, hi, h, intervals);
  double f = intercept + slope * x;
  for (long long j = 0; j < m; ++j) {
    double b_next = lo + h * static_cast<double>(j + 1);
    f += seg[j] * (h * h / 2.0 + h * (x - b_next));
  }
  if (m >= 0 && m < static_cast<long long>(intervals)) {
    double b_m = lo + h * static_cast<double>(m);
    f += seg[m] * (x - b_m) * (x - b_m) / 2.0;
  }
  return f;
}

Var saaf(Tape& t, Var x, Parameter& segments, Parameter& affine, double lo,
         double hi) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "saaf: x must be (time, channels)");
  std::size_t t_len = xin.dim(0), ch = xin.dim(1);
  if (segments.value.rank() != 2 || segments.value.dim(0) != ch) {
    fail(ErrorKind::kUsage, "saaf: segments must be (channels, intervals)");
  }
  if (affine.value.rank() != 2 || affine.value.dim(0) != ch ||
      affine.value.dim(1) != 2) {
    fail(ErrorKind::kUsage, "saaf: affine must be (channels, 2)");
  }
  std::size_t j_count = segments.value.dim(1);
  double h = (hi - lo) / static_cast<double>(j_count);

  // Prefix sums per channel make the evaluation O(1) per element:
  // sum_{j<m} seg_j (h^2/2 + h (x - b_{j+1}))
  //   = h (h/2 + x) C0(m) - h C1(m),
  // with C0(m) = sum_{j<m} seg_j and C1(m) = sum_{j<m} seg_j b_{j+1}.
  std::vector<double> c0((j_count + 1) * ch, 0.0), c1((j_count + 1) * ch, 0.0);
  for (std::size_t c = 0; c < ch; ++c) {
    for (std::size_t j = 0; j < j_count; ++j) {
      double s = segments.value.at(c, j);
      double b_next = lo + h * static_cast<double>(j + 1);
      c0[(j + 1) * ch + c] = c0[j * ch + c] + s;
      c1[(j + 1) * ch + c] = c1[j * ch + c] + s * b_next;
    }
  }

  Tensor out({t_len, ch});
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    for (std::size_t c = 0; c < ch; ++c) {
      double v = xin.at(tt, c);
      double f = affine.value.at(c, 0) + affine.value.at(c, 1) * v;
      long long m = interval_of(v, lo, hi, h, j_count);
      if (m >= 0) {
        std::size_t mm = static_cast<std::size_t>(m);
        f += h * (h / 2.0 + v) * c0[mm * ch + c] - h * c1[mm * ch + c];
        if (mm < j_count) {
          double b_m = lo + h * static_cast<double>(mm);
          f += segments.value.at(c, mm) * (v - b_m) * (v - b_m) / 2.0;
        }
      }
      out.at(tt, c) = f;
    }
  }
  Var y = t.record(std::move(out));

  auto c0p = std::make_shared<std::vector<double>>(std::move(c0));
  t.record_backward([x, y, &segments, &affine, lo, hi, h, j_count, t_len, ch,
                     c0p](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& xin2 = tp.value(x);
    Tensor& gx = tp.grad(x);

    // Per-interval aggregates; segment gradients come from suffix sums so
    // the pass stays O(elements + intervals) per channel.
    std::vector<double> s0((j_count + 1) * ch, 0.0);  // sum of g
    std::vector<double> s1((j_count + 1) * ch, 0.0);  // sum of g x
    std::vector<double> q(j_count * ch, 0.0);         // own-interval quad part

    for (std::size_t tt = 0; tt < t_len; ++tt) {
      for (std::size_t c = 0; c < ch; ++c) {
        double v = xin2.at(tt, c);
        double g = gout.at(tt, c);
        long long m = interval_of(v, lo, hi, h, j_count);
        affine.grad.at(c, 0) += g;
        affine.grad.at(c, 1) += g * v;
        double dfdx = affine.value.at(c, 1);
        if (m >= 0) {
          std::size_t mm = static_cast<std::size_t>(m);
          dfdx += h * (*c0p)[mm * ch + c];
          s0[mm * ch + c] += g;
          s1[mm * ch + c] += g * v;
          if (mm < j_count) {
            double b_m = lo + h * static_cast<double>(mm);
            dfdx += segments.value.at(c, mm) * (v - b_m);
            q[mm * ch + c] += g * (v - b_m) * (v - b_m) / 2.0;
          }
        }
        gx.at(tt, c) += g * dfdx;
      }
    }

    // dseg_j = Q(j) + (h^2/2 - h b_{j+1}) T0(j+1) + h T1(j+1),
    // T* = suffix sums of S* over intervals > j.
    for (std::size_t c = 0; c < ch; ++c) {
      double t0 = 0.0, t1 = 0.0;
      for (long long j = static_cast<long long>(j_count); j-- > 0;) {
        t0 += s0[(j + 1) * ch + c];
        t1 += s1[(j + 1) * ch + c];
        double b_next = lo + h * static_cast<double>(j + 1);
        segments.grad.at(c, static_cast<std::size_t>(j)) +=
            q[j * ch + c] + (h * h / 2.0 - h * b_next) * t0 + h * t1;
      }
    }
  });
  return y;
}

}  // namespace tvfx::nn
