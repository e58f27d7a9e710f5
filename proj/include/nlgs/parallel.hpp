// Minimal worker-pool helpers for the embedding sweeps.
#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace nlgs {

// Worker count: NLGS_WORKERS if set, else hardware concurrency.
std::size_t worker_count();

// Runs fn(task_index, worker_index) for every task in [0, n_tasks),
// dynamically scheduled over worker_count() threads.
void parallel_tasks(std::size_t n_tasks,
                    const std::function<void(std::size_t, std::size_t)>& fn);

// Lock-free monotone minimum for reductions across workers.
inline void atomic_min(std::atomic<double>& target, double value) {
  double current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

inline void atomic_max(std::atomic<double>& target, double value) {
  double current = target.load(std::memory_order_relaxed);
  while (value > current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace nlgs
