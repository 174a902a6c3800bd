// Minimal deterministic work-sharing. Items must be independent; each item
// writes only to its own slot, so results are identical for any thread count.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cadet {

inline std::atomic<int>& max_threads_slot() {
  static std::atomic<int> value{0};  // 0 = use hardware concurrency
  return value;
}

inline void set_max_threads(int n) { max_threads_slot().store(n < 0 ? 0 : n); }

inline int max_threads() {
  int n = max_threads_slot().load();
  if (n <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    n = hc == 0 ? 1 : static_cast<int>(hc);
  }
  return n;
}

template <class F>
void parallel_for(std::size_t n, F&& fn) {
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(max_threads());
  if (workers > n) workers = n;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = n * w / workers;
    std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace cadet
