// Minimal parallel-map capability.  The CLI decides the worker count; library
// code only sees chunked index ranges and merges results in order, so results
// are identical for any thread count.
#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace weilzeta {

struct Parallel {
  int threads = 1;

  static int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
  }

  // Splits [0, n) into contiguous chunks and runs fn(begin, end) on each.
  // Chunk boundaries depend only on n and the thread count.
  void for_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) const {
    int workers = threads < 1 ? 1 : threads;
    if (workers == 1 || n < 2) {
      if (n > 0) fn(0, n);
      return;
    }
    if (workers > n) workers = static_cast<int>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::int64_t lo = w * chunk;
      std::int64_t hi = lo + chunk < n ? lo + chunk : n;
      if (lo >= hi) break;
      pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
  }
};

}  // namespace weilzeta
