#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace saacg {

/// Global worker count for per-sample parallel loops.
/// 0 means "use hardware concurrency".
inline std::atomic<unsigned>& thread_count_ref() {
  static std::atomic<unsigned> count{0};
  return count;
}

inline void set_num_threads(unsigned n) { thread_count_ref().store(n); }

inline unsigned num_threads() {
  unsigned n = thread_count_ref().load();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Runs f(i) for i in [0, n). Each index is processed exactly once; workers
/// pull indices from a shared counter. Results must be written to
/// preallocated per-index slots so reductions can happen in fixed order
/// afterwards, independent of scheduling.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned workers = std::min<std::size_t>(num_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace saacg
