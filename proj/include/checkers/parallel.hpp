#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace checkers {

/// Worker bound: CHECKERS_THREADS when set, otherwise the hardware
/// concurrency (at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("CHECKERS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) {
      return n;
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// fn(i) for i in [begin, end), fanned out over workers; fn must be safe to
/// call concurrently for distinct i. Results are the caller's problem —
/// write into a preallocated slot per index to keep them ordered.
template <typename Fn>
void parallel_for(int begin, int end, Fn fn) {
  const int n = end - begin;
  if (n <= 0) {
    return;
  }
  const int workers = std::min(worker_count(), n);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = begin + w; i < end; i += workers) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace checkers
