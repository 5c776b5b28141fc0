#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace finvar::detail {

// Runs fn(i) for i in [0, count) on up to jobs threads in contiguous blocks.
template <class Fn>
void parallel_for(int jobs, std::size_t count, Fn fn) {
  if (jobs <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t per = (count + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    std::size_t lo = t * per, hi = std::min(count, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace finvar::detail
