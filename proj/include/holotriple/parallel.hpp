#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace holo {

// Worker cap: HOLOTRIPLE_THREADS when set, hardware concurrency otherwise.
inline int max_threads() {
  if (const char* env = std::getenv("HOLOTRIPLE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Index-parallel loop; falls back to serial execution for a single worker.
inline void parallel_for(int n, const std::function<void(int)>& body) {
  int workers = std::min(n, max_threads());
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace holo
