#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace systole {

// Splits [0, n) into `threads` contiguous slices; fn(slice, begin, end).
// Rethrows the first worker exception.
template <class Fn>
void parallel_slices(std::size_t n, int threads, Fn fn) {
  std::size_t t = static_cast<std::size_t>(std::max(1, threads));
  t = std::min(t, std::max<std::size_t>(1, n));
  if (t == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errs(t);
  std::vector<std::thread> pool;
  for (std::size_t s = 0; s < t; ++s) {
    std::size_t b = n * s / t, e = n * (s + 1) / t;
    pool.emplace_back([&, s, b, e] {
      try {
        fn(s, b, e);
      } catch (...) {
        errs[s] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

inline int default_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

}  // namespace systole
