#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace dagsim {

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// count). Work is split in contiguous blocks; callers must write results
/// into per-index slots so that the outcome is independent of scheduling.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn, unsigned threads = 0) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (threads > count) threads = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dagsim
