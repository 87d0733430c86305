#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edgecut {

/// Worker cap: an explicit override if set, otherwise EDGECUT_THREADS, otherwise
/// the hardware concurrency. Always >= 1.
int worker_count();

/// Overrides the worker count for the current process; 0 restores the default.
void set_worker_count(int workers);

/// Runs fn(i) for i in [0, count) over contiguous chunks. Each index must only
/// write its own output slot; reductions happen afterwards on the caller's side,
/// which keeps results independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t min_per_worker = 1) {
  const std::size_t cap = static_cast<std::size_t>(worker_count());
  const std::size_t workers = std::min(cap, std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_per_worker)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace edgecut
