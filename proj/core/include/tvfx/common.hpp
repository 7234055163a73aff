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
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace tvfx {

/// Error category, also used for CLI exit codes.
enum class ErrorKind {
  kUsage = 1,
  kIo = 2,
  kFormat = 3,
  kState = 4,
  kNumeric = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* category_name() const;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

/// Minimal stderr logging. Warnings can be counted by tests.
void log_info(const std::string& msg);
void log_warn(const std::string& msg);
std::uint64_t warn_count();

/// Deterministic RNG: std::mt19937_64 engine (output pinned by the
/// standard) with hand-rolled value mappings, so streams are identical
/// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 hash step; used to derive independent seeds from
/// (run seed, epoch, clip, position, ...) tuples.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       Rest... rest) {
  return mix_seed(mix_seed(a, b), c, static_cast<std::uint64_t>(rest)...);
}

/// Runs fn(i) for i in [0, n) on the shared pool. Deterministic as long as
/// iterations write disjoint state. Falls back to inline execution for
/// small n or when called from inside a pool worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Number of workers parallel_for uses (fixed at first use; >= 1).
std::size_t parallel_workers();
/// Sets the worker count before first use (CLI --workers). 0 = hardware.
void set_parallel_workers(std::size_t n);

/// FNV-1a 64-bit content hash, used for corpus manifests.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace tvfx
