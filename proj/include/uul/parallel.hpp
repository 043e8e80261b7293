#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace uul {

/// Worker count: UUL_THREADS if set to a positive integer, else the hardware
/// concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("UUL_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (...) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Runs `test(i)` for i in [0, total) across workers and returns the least
/// index for which it returns false. Chunks past the best witness found so
/// far are skipped, so the answer does not depend on scheduling.
template <typename Test>
std::optional<std::uint64_t> find_least_failure(std::uint64_t total, Test&& test, unsigned workers = worker_count()) {
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  std::atomic<std::uint64_t> next_chunk{0};
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / (workers * 8 + 1)));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run_chunks = [&] {
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(chunk);
      if (begin >= total || begin >= best.load()) return;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i >= best.load()) break;
        if (!test(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  auto run = [&] {
    try {
      run_chunks();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total / chunk + 1)));
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (best.load() == none) return std::nullopt;
  return best.load();
}

/// Applies `fn(i)` for i in [0, count) on a worker pool; results are stored
/// by index so output order never depends on completion order.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned workers = worker_count()) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, count)));
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace uul
