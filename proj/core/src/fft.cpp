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

#include "tvfx/dsp/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "tvfx/common.hpp"

namespace tvfx::dsp {

namespace {
// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex g_plan_mutex;

std::vector<std::complex<double>> run_dft(
    const std::vector<std::complex<double>>& x, int sign) {
  if (x.empty()) return {};
  std::size_t n = x.size();
  std::vector<std::complex<double>> in(x), out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(n),
                            reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), sign,
                            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}
}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x) {
  return run_dft(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft(const std::vector<double>& x) {
  std::vector<std::complex<double>> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = x[i];
  return run_dft(cx, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& X) {
  auto out = run_dft(X, FFTW_BACKWARD);
  double scale = X.empty() ? 1.0 : 1.0 / static_cast<double>(X.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> magnitude_spectrum(const std::vector<double>& x) {
  auto X = fft(x);
  std::vector<double> mag(x.size() / 2 + 1);
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(X[i]);
  return mag;
}

std::vector<double> hilbert_envelope(const std::vector<double>& x) {
  std::size_t n = x.size();
  if (n == 0) return {};
  auto X = fft(x);
  // Analytic-signal multiplier: keep DC (and Nyquist for even n), double
  // the positive frequencies, zero the negative ones.
  std::size_t half = n / 2;
  for (std::size_t k = 1; k < half + (n % 2 ? 1 : 0); ++k) X[k] *= 2.0;
  for (std::size_t k = half + 1; k < n; ++k) X[k] = 0.0;
  auto z = ifft(X);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(z[i]);
  return env;
}

std::size_t peak_bin(const std::vector<double>& x) {
  auto mag = magnitude_spectrum(x);
  std::size_t best = 1;
  for (std::size_t k = 1; k < mag.size(); ++k) {
    if (mag[k] > mag[best]) best = k;
  }
  return best;
}

double peak_frequency(const std::vector<double>& x, double sample_rate) {
  if (x.size() < 2) fail(ErrorKind::kUsage, "peak_frequency: signal too short");
  return static_cast<double>(peak_bin(x)) * sample_rate /
         static_cast<double>(x.size());
}

}  // namespace tvfx::dsp
