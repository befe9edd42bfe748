#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fekete {

// Worker count for parallel sections: FEKETE_THREADS if set and positive,
// otherwise the hardware concurrency. Monte-Carlo results depend on the
// worker count (one substream per worker), so it is read once and kept
// fixed for the process lifetime.
inline int default_workers() {
  static const int n = [] {
    if (const char* env = std::getenv("FEKETE_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
  }();
  return n;
}

// Runs fn(worker) for worker = 0..workers-1. Exceptions from workers are
// rethrown on the calling thread (first worker index wins).
inline void run_workers(int workers, const std::function<void(int)>& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace fekete
