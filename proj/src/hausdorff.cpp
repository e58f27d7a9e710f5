#include "nlgs/hausdorff.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "nlgs/parallel.hpp"
#include "nlgs/rng.hpp"

namespace nlgs {

namespace {

void require_compatible(const PointCloud& a, const PointCloud& b) {
  if (a.size == 0 || b.size == 0)
    throw std::invalid_argument("hausdorff: empty point cloud");
  if (a.dim != b.dim) throw std::invalid_argument("hausdorff: dimension mismatch");
}

double sq_dist(const double* p, const double* q, std::size_t d) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double diff = p[k] - q[k];
    s += diff * diff;
  }
  return s;
}

}  // namespace

PointCloud::PointCloud(std::size_t n, std::size_t d)
    : size(n), dim(d), data(n * d, 0.0) {
  if (n == 0 || d == 0) throw std::invalid_argument("PointCloud: N and D must be >= 1");
}

PointCloud::PointCloud(std::size_t n, std::size_t d, std::vector<double> values)
    : size(n), dim(d), data(std::move(values)) {
  if (n == 0 || d == 0) throw std::invalid_argument("PointCloud: N and D must be >= 1");
  if (data.size() != n * d) throw std::invalid_argument("PointCloud: bad buffer length");
  for (double v : data)
    if (!std::isfinite(v)) throw std::invalid_argument("PointCloud: non-finite coordinate");
}

double directed_hausdorff(const PointCloud& a, const PointCloud& b,
                          std::optional<std::uint64_t> shuffle_seed) {
  require_compatible(a, b);
  std::vector<std::size_t> order;
  if (shuffle_seed) order = shuffled_indices(a.size, *shuffle_seed);

  double cmax2 = 0.0;
  const std::size_t d = a.dim;
  for (std::size_t idx = 0; idx < a.size; ++idx) {
    const double* p = a.row(shuffle_seed ? order[idx] : idx);
    double cmin2 = -1.0;
    bool skipped = false;
    for (std::size_t j = 0; j < b.size; ++j) {
      const double d2 = sq_dist(p, b.row(j), d);
      if (d2 < cmax2) {
        // This point cannot raise the maximum.
        skipped = true;
        break;
      }
      if (cmin2 < 0.0 || d2 < cmin2) cmin2 = d2;
    }
    if (!skipped && cmin2 > cmax2) cmax2 = cmin2;
  }
  return std::sqrt(cmax2);
}

double hausdorff_dist(const PointCloud& a, const PointCloud& b) {
  require_compatible(a, b);
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double diameter(const PointCloud& a) {
  const std::size_t n = a.size;
  const std::size_t d = a.dim;
  if (n < 2) return 0.0;

  std::atomic<double> best{0.0};
  const std::size_t chunk = 256;
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  parallel_tasks(n_chunks, [&](std::size_t task, std::size_t) {
    const std::size_t lo = task * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    double local = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double* p = a.row(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d2 = sq_dist(p, a.row(j), d);
        if (d2 > local) local = d2;
      }
    }
    atomic_max(best, local);
  });
  return std::sqrt(best.load());
}

}  // namespace nlgs
