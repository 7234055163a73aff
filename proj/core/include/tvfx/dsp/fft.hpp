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

#include <complex>
#include <vector>

namespace tvfx::dsp {

/// Forward DFT of a real signal; returns all n complex bins.
std::vector<std::complex<double>> fft(const std::vector<double>& x);

/// Forward/inverse DFT of a complex signal. The inverse includes the 1/n
/// scaling, so ifft(fft(x)) == x.
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& X);

/// |X_k| for the non-negative-frequency half (n/2 + 1 bins).
std::vector<double> magnitude_spectrum(const std::vector<double>& x);

/// Envelope via the analytic signal: magnitude of the FFT-based Hilbert
/// transform of x.
std::vector<double> hilbert_envelope(const std::vector<double>& x);

/// Index of the largest-magnitude bin in [1, n/2]; with sample_rate given,
/// returns the corresponding frequency in Hz.
std::size_t peak_bin(const std::vector<double>& x);
double peak_frequency(const std::vector<double>& x, double sample_rate);

}  // namespace tvfx::dsp
