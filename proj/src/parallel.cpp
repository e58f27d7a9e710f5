#include "nlgs/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nlgs {

std::size_t worker_count() {
  if (const char* env = std::getenv("NLGS_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

void parallel_tasks(std::size_t n_tasks,
                    const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), n_tasks == 0 ? 1 : n_tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) fn(t, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
        if (t >= n_tasks) return;
        fn(t, w);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace nlgs
