#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace eafjsp {

// Runs fn(i) for i in [0, n). Work items must be independent and write only
// to their own slots; with that contract the result is identical for any
// thread count, which keeps parallel and serial runs byte-equal.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace eafjsp
