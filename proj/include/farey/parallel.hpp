#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace farey {

// Worker count: FAREY_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_count();

// Evaluates fn(i) for lo <= i <= hi, returning results in index order.
// Work is split into contiguous chunks; the first exception thrown by any
// worker is rethrown on the calling thread.
template <typename Fn>
auto parallel_map(std::int64_t lo, std::int64_t hi, Fn&& fn)
    -> std::vector<decltype(fn(std::int64_t{}))> {
  using T = decltype(fn(std::int64_t{}));
  if (hi < lo) return {};
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<T> out(count);
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(lo + static_cast<std::int64_t>(i));
    return out;
  }

  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  // Interleaved chunks balance cost that grows with i.
  constexpr std::size_t chunk = 256;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t start = w * chunk; start < count; start += workers * chunk) {
          const std::size_t stop = std::min(count, start + chunk);
          for (std::size_t i = start; i < stop; ++i) out[i] = fn(lo + static_cast<std::int64_t>(i));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace farey
