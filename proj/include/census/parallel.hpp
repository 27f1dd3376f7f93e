#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace census {

// Index-parallel map with slot-addressed results: out[i] = fn(i). The output
// is independent of scheduling, so downstream reports stay deterministic for
// any job count. The first worker exception is rethrown on the caller.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<R> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::scoped_lock lock(err_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };

  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace census
