#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace reid::detail {

// Runs fn(begin, end) over contiguous chunks of [first, last) on up to
// hardware_concurrency() threads. Chunks are disjoint, so writes to
// per-index output slots need no synchronization and results do not depend
// on the thread count.
template <typename Fn>
void parallel_chunks(std::size_t first, std::size_t last, const Fn& fn) {
  const std::size_t n = last - first;
  if (n == 0) {
    return;
  }
  std::size_t workers = std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, n);
  if (workers == 1) {
    fn(first, last);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = first + w * chunk;
    const std::size_t hi = std::min(last, lo + chunk);
    if (lo >= hi) {
      break;
    }
    threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : threads) {
    t.join();
  }
}

}  // namespace reid::detail
