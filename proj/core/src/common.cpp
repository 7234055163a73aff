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

#include "tvfx/common.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

namespace tvfx {

const char* Error::category_name() const {
  switch (kind_) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kState: return "state";
    case ErrorKind::kNumeric: return "numeric";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

namespace {
std::atomic<std::uint64_t> g_warn_count{0};
std::mutex g_log_mutex;
}  // namespace

void log_info(const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "[tvfx] " << msg << "\n";
}

void log_warn(const std::string& msg) {
  g_warn_count.fetch_add(1, std::memory_order_relaxed);
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "[tvfx] warning: " << msg << "\n";
}

std::uint64_t warn_count() {
  return g_warn_count.load(std::memory_order_relaxed);
}

double Rng::uniform() {
  // 53 random bits -> [0, 1), the usual double mapping.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::kUsage, "Rng::below(0)");
  // Rejection sampling keeps the mapping unbiased and pinned.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = 0;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix_seed(a ^ (mix_seed(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

namespace {

class ThreadPool {
 public:
  explicit ThreadPool(std::size_t workers) {
    for (std::size_t i = 0; i < workers; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void run(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::lock_guard<std::mutex> outer(run_mutex_);
    std::unique_lock<std::mutex> lock(mutex_);
    fn_ = &fn;
    next_ = 0;
    total_ = n;
    pending_ = n;
    cv_.notify_all();
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    fn_ = nullptr;
  }

 private:
  void worker_loop() {
    std::unique_lock<std::mutex> lock(mutex_);
    for (;;) {
      cv_.wait(lock, [this] { return stop_ || (fn_ && next_ < total_); });
      if (stop_) return;
      while (fn_ && next_ < total_) {
        std::size_t i = next_++;
        auto* fn = fn_;
        lock.unlock();
        (*fn)(i);
        lock.lock();
        if (--pending_ == 0) done_cv_.notify_all();
      }
    }
  }

  std::vector<std::thread> threads_;
  std::mutex run_mutex_;
  std::mutex mutex_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  const std::function<void(std::size_t)>* fn_ = nullptr;
  std::size_t next_ = 0;
  std::size_t total_ = 0;
  std::size_t pending_ = 0;
  bool stop_ = false;
};

std::size_t g_requested_workers = 0;
std::once_flag g_pool_once;
ThreadPool* g_pool = nullptr;
std::size_t g_pool_workers = 1;
thread_local bool t_in_pool = false;

void init_pool() {
  std::size_t n = g_requested_workers;
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  g_pool_workers = n;
  if (n > 1) g_pool = new ThreadPool(n);
}

}  // namespace

void set_parallel_workers(std::size_t n) { g_requested_workers = n; }

std::size_t parallel_workers() {
  std::call_once(g_pool_once, init_pool);
  return g_pool_workers;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::call_once(g_pool_once, init_pool);
  if (g_pool == nullptr || n <= 1 || t_in_pool) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::function<void(std::size_t)> marked = [&fn](std::size_t i) {
    t_in_pool = true;
    fn(i);
    t_in_pool = false;
  };
  g_pool->run(n, marked);
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open for hashing: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[65536];
  while (in) {
    in.read(buf, sizeof buf);
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace tvfx
