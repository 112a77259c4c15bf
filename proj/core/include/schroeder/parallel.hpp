#ifndef SCHROEDER_PARALLEL_HPP_
#define SCHROEDER_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace schroeder {

/// Runs fn(i) for every i in [begin, end), partitioned across workers
/// (threads = 0 picks the hardware concurrency). fn must only write to
/// index-disjoint state; results are then deterministic regardless of
/// scheduling. The first exception thrown by any worker is rethrown.
inline void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  const std::size_t count = end > begin ? end - begin : 0;
  if (count == 0) {
    return;
  }
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) {
    workers = 1;
  }
  if (workers > count) {
    workers = static_cast<unsigned>(count);
  }
  if (workers == 1) {
    for (std::size_t i = begin; i < end; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace schroeder

#endif  // SCHROEDER_PARALLEL_HPP_
