// Exact Hausdorff distances between finite point clouds sharing a Euclidean
// ambient space, using the early-break scan. Squared distances are compared
// throughout and the square root is taken once at the end, so results match
// the naive double loop bit for bit.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nlgs {

struct PointCloud {
  // Row-major N x D storage; all coordinates must be finite.
  PointCloud(std::size_t n, std::size_t d);
  PointCloud(std::size_t n, std::size_t d, std::vector<double> values);

  double* row(std::size_t i) { return data.data() + i * dim; }
  const double* row(std::size_t i) const { return data.data() + i * dim; }

  std::size_t size = 0;
  std::size_t dim = 0;
  std::vector<double> data;
};

// max over a of min over b of the Euclidean distance. The outer scan order is
// shuffled with the given seed (identity order when absent); the inner scan
// breaks as soon as a squared distance drops below the running maximum. The
// result does not depend on the seed.
double directed_hausdorff(const PointCloud& a, const PointCloud& b,
                          std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// max of the two directed distances.
double hausdorff_dist(const PointCloud& a, const PointCloud& b);

// max pairwise distance; parallelized over rows for large clouds.
double diameter(const PointCloud& a);

}  // namespace nlgs
