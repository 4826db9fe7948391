#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spg {

/// Worker count used when the caller passes 0.
inline int default_thread_count() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Calls fn(k) for every k in [0, count) on up to `threads` workers. Each
/// index is visited exactly once; callers write results into slot k so the
/// outcome does not depend on scheduling. The exception from the lowest
/// failing index is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(threads < 1 ? default_thread_count() : threads));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
          try {
            fn(k);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (k < error_index) {
              error_index = k;
              error = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace spg
