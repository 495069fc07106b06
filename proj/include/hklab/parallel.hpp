#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hklab {

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(0..count-1), spreading indices over `workers` threads via an
/// atomic cursor.  Results must be written to disjoint slots by index so the
/// outcome is independent of scheduling.  The first exception wins and is
/// rethrown after all threads join.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
  workers = resolve_workers(workers);
  if (count <= 1 || workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (std::size_t(workers) > count) workers = unsigned(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hklab
