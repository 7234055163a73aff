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

#include "tvfx/audio/resample.hpp"

#include <cmath>
#include <vector>

#include "tvfx/common.hpp"

namespace tvfx {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Zeroth-order modified Bessel function, power series.
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

std::vector<double> resample_channel(const std::vector<double>& x, int src,
                                     int dst) {
  std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(x.size()) * dst / src));
  std::vector<double> y(out_len, 0.0);
  double ratio = static_cast<double>(src) / dst;  // input samples per output
  // Cutoff at the lower Nyquist; the kernel spans 64 taps at that rate.
  double cutoff = ratio > 1.0 ? 1.0 / ratio : 1.0;
  double half_width = 32.0 * std::max(1.0, ratio);
  double beta = 8.6;
  double i0_beta = bessel_i0(beta);

  for (std::size_t n = 0; n < out_len; ++n) {
    double center = static_cast<double>(n) * ratio;
    long long lo = static_cast<long long>(std::ceil(center - half_width));
    long long hi = static_cast<long long>(std::floor(center + half_width));
    double acc = 0.0, wsum = 0.0;
    for (long long m = lo; m <= hi; ++m) {
      double d = static_cast<double>(m) - center;
      double u = d / half_width;
      double w = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - u * u))) / i0_beta;
      double h = cutoff * sinc(cutoff * d) * w;
      wsum += h;
      if (m >= 0 && m < static_cast<long long>(x.size())) {
        acc += h * x[static_cast<std::size_t>(m)];
      }
    }
    // Normalizing by the full kernel sum keeps DC exact.
    y[n] = wsum != 0.0 ? acc / wsum : 0.0;
  }
  return y;
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) fail(ErrorKind::kUsage, "resample: target_rate must be > 0");
  if (target_rate == clip.sample_rate) return clip;
  if (clip.mono()) {
    return AudioClip(resample_channel(clip.samples, clip.sample_rate, target_rate),
                     target_rate, 1);
  }
  AudioClip left = clip.channel(0), right = clip.channel(1);
  return AudioClip::stereo(
      AudioClip(resample_channel(left.samples, clip.sample_rate, target_rate),
                target_rate, 1),
      AudioClip(resample_channel(right.samples, clip.sample_rate, target_rate),
                target_rate, 1));
}

}  // namespace tvfx
