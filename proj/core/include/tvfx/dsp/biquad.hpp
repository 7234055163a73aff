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

#include <cmath>
#include <complex>
#include <vector>

namespace tvfx::dsp {

/// Direct-form-I biquad, coefficients normalized so a0 == 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  double process(double x) {
    double y = b0 * x + b1 * x1_ + b2 * x2_ - a1 * y1_ - a2 * y2_;
    x2_ = x1_;
    x1_ = x;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

  void reset() { x1_ = x2_ = y1_ = y2_ = 0.0; }

  /// Transfer function value at normalized angular frequency w (rad/sample).
  std::complex<double> response(double w) const {
    std::complex<double> z1 = std::polar(1.0, -w);
    std::complex<double> z2 = z1 * z1;
    return (b0 + b1 * z1 + b2 * z2) / (1.0 + a1 * z1 + a2 * z2);
  }

 private:
  double x1_ = 0.0, x2_ = 0.0, y1_ = 0.0, y2_ = 0.0;
};

/// Audio-EQ-cookbook designs.
inline Biquad butterworth_lowpass(double fc, double fs) {
  double w0 = 2.0 * 3.14159265358979323846 * fc / fs;
  double q = 0.70710678118654752440;
  double alpha = std::sin(w0) / (2.0 * q);
  double c = std::cos(w0);
  double a0 = 1.0 + alpha;
  Biquad s;
  s.b0 = (1.0 - c) / 2.0 / a0;
  s.b1 = (1.0 - c) / a0;
  s.b2 = s.b0;
  s.a1 = -2.0 * c / a0;
  s.a2 = (1.0 - alpha) / a0;
  return s;
}

inline Biquad butterworth_highpass(double fc, double fs) {
  double w0 = 2.0 * 3.14159265358979323846 * fc / fs;
  double q = 0.70710678118654752440;
  double alpha = std::sin(w0) / (2.0 * q);
  double c = std::cos(w0);
  double a0 = 1.0 + alpha;
  Biquad s;
  s.b0 = (1.0 + c) / 2.0 / a0;
  s.b1 = -(1.0 + c) / a0;
  s.b2 = s.b0;
  s.a1 = -2.0 * c / a0;
  s.a2 = (1.0 - alpha) / a0;
  return s;
}

/// Band-pass with 0 dB peak gain at fc.
inline Biquad bandpass_peak(double fc, double fs, double q) {
  double w0 = 2.0 * 3.14159265358979323846 * fc / fs;
  double alpha = std::sin(w0) / (2.0 * q);
  double a0 = 1.0 + alpha;
  Biquad s;
  s.b0 = alpha / a0;
  s.b1 = 0.0;
  s.b2 = -alpha / a0;
  s.a1 = -2.0 * std::cos(w0) / a0;
  s.a2 = (1.0 - alpha) / a0;
  return s;
}

/// Applies a cascade of sections to a signal (stateless convenience).
inline std::vector<double> filter(std::vector<Biquad> sections,
                                  const std::vector<double>& x) {
  std::vector<double> y = x;
  for (auto& s : sections) {
    for (auto& v : y) v = s.process(v);
  }
  return y;
}

}  // namespace tvfx::dsp
