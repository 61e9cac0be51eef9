#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ballmodal::detail {

inline constexpr std::uint64_t kChunk = 64;

// Calls body(i) for every i in [0, count).  Work is handed out in chunks;
// the first exception thrown by any worker is rethrown after all join.
inline void parallel_for(std::uint64_t count, unsigned workers,
                         const std::function<void(std::uint64_t)>& body) {
  if (workers <= 1 || count <= kChunk) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= count) return;
        const std::uint64_t end = std::min(count, start + kChunk);
        for (std::uint64_t i = start; i < end; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Smallest i in [0, count) with pred(i), or nothing.  Workers skip indices
// above the best hit found so far, so the answer matches a sequential scan.
inline std::optional<std::uint64_t> parallel_find_first(
    std::uint64_t count, unsigned workers,
    const std::function<bool(std::uint64_t)>& pred) {
  if (workers <= 1 || count <= kChunk) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{count};
  parallel_for((count + kChunk - 1) / kChunk, workers, [&](std::uint64_t chunk) {
    const std::uint64_t start = chunk * kChunk;
    const std::uint64_t end = std::min(count, start + kChunk);
    for (std::uint64_t i = start; i < end; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (pred(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  const std::uint64_t b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

}  // namespace ballmodal::detail
