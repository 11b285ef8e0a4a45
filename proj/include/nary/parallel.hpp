#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace nary {

// Runs f(i) for i in [0, n) on up to `threads` workers and returns the
// results by index. With stop_at_first, tasks after the smallest index that
// produced a value are skipped; the smallest such index is always computed,
// so the first hit does not depend on scheduling.
template <class T, class F>
std::vector<std::optional<T>> parallel_collect(std::size_t n, unsigned threads, bool stop_at_first, F&& f) {
  std::vector<std::optional<T>> out(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{n};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      if (stop_at_first && i > first_hit.load(std::memory_order_relaxed)) continue;
      out[i] = f(i);
      if (out[i] && stop_at_first) {
        std::size_t cur = first_hit.load(std::memory_order_relaxed);
        while (i < cur && !first_hit.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
      }
    }
  };
  const unsigned t = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (t == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace nary
