#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nlgs/hausdorff.hpp"
#include "nlgs/rng.hpp"

using namespace nlgs;

namespace {

// Brute-force oracle: plain max-min over squared distances.
double directed_oracle(const PointCloud& a, const PointCloud& b) {
  double cmax2 = 0.0;
  for (std::size_t i = 0; i < a.size; ++i) {
    double cmin2 = -1.0;
    for (std::size_t j = 0; j < b.size; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < a.dim; ++k) {
        const double diff = a.row(i)[k] - b.row(j)[k];
        d2 += diff * diff;
      }
      if (cmin2 < 0.0 || d2 < cmin2) cmin2 = d2;
    }
    if (cmin2 > cmax2) cmax2 = cmin2;
  }
  return std::sqrt(cmax2);
}

PointCloud random_cloud(SplitMix64& rng, std::size_t max_n, std::size_t max_d,
                        std::size_t forced_d = 0) {
  const std::size_t n = 1 + rng.uniform_below(max_n);
  const std::size_t d = forced_d ? forced_d : 1 + rng.uniform_below(max_d);
  PointCloud cloud(n, d);
  for (double& v : cloud.data) v = 4.0 * rng.next_double() - 2.0;
  return cloud;
}

PointCloud line_cloud(std::vector<double> xs) {
  return PointCloud(xs.size(), 1, std::move(xs));
}

}  // namespace

TEST_CASE("directed distance on singletons and identical clouds") {
  const PointCloud a = line_cloud({0.0});
  const PointCloud b = line_cloud({3.0});
  CHECK(directed_hausdorff(a, b) == 3.0);
  CHECK(directed_hausdorff(a, a) == 0.0);
}

TEST_CASE("directed distance is asymmetric") {
  const PointCloud a = line_cloud({0.0, 1.0});
  const PointCloud b = line_cloud({0.0, 5.0});
  CHECK(directed_hausdorff(a, b) == 1.0);
  CHECK(directed_hausdorff(b, a) == 4.0);
  CHECK(hausdorff_dist(a, b) == 4.0);
  CHECK(hausdorff_dist(b, a) == 4.0);
}

TEST_CASE("errors on empty or mismatched input") {
  CHECK_THROWS_AS(PointCloud(0, 1), std::invalid_argument);
  const PointCloud a(1, 2);
  const PointCloud b(1, 3);
  CHECK_THROWS_AS(hausdorff_dist(a, b), std::invalid_argument);
  CHECK_THROWS_AS(PointCloud(1, 1, {std::nan("")}), std::invalid_argument);
}

TEST_CASE("early break matches the brute-force oracle exactly") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const PointCloud a = random_cloud(rng, 200, 6);
    const PointCloud b = random_cloud(rng, 200, 6, a.dim);
    CHECK(directed_hausdorff(a, b) == directed_oracle(a, b));
    CHECK(hausdorff_dist(a, b) ==
          std::max(directed_oracle(a, b), directed_oracle(b, a)));
  }
}

TEST_CASE("result is independent of the shuffle seed") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const PointCloud a = random_cloud(rng, 150, 4);
    const PointCloud b = random_cloud(rng, 150, 4, a.dim);
    const double expected = directed_oracle(a, b);
    CHECK(directed_hausdorff(a, b) == expected);
    for (std::uint64_t seed : {1ULL, 42ULL, 12345ULL})
      CHECK(directed_hausdorff(a, b, seed) == expected);
  }
}

TEST_CASE("translation invariance") {
  SplitMix64 rng(107);
  PointCloud a = random_cloud(rng, 100, 3);
  PointCloud b = random_cloud(rng, 100, 3, a.dim);
  const double before = hausdorff_dist(a, b);
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) a.row(i)[k] += 0.75;
  for (std::size_t i = 0; i < b.size; ++i)
    for (std::size_t k = 0; k < b.dim; ++k) b.row(i)[k] += 0.75;
  CHECK(hausdorff_dist(a, b) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("adding points to the target cannot increase the directed distance") {
  SplitMix64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const PointCloud a = random_cloud(rng, 80, 3);
    PointCloud b = random_cloud(rng, 80, 3, a.dim);
    const double before = directed_hausdorff(a, b);
    PointCloud extended(b.size + 5, b.dim);
    std::copy(b.data.begin(), b.data.end(), extended.data.begin());
    for (std::size_t i = b.size; i < extended.size; ++i)
      for (std::size_t k = 0; k < b.dim; ++k)
        extended.row(i)[k] = 4.0 * rng.next_double() - 2.0;
    CHECK(directed_hausdorff(a, extended) <= before);
  }
}

TEST_CASE("hausdorff distance is bounded by the union diameter") {
  SplitMix64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const PointCloud a = random_cloud(rng, 60, 3);
    const PointCloud b = random_cloud(rng, 60, 3, a.dim);
    PointCloud all(a.size + b.size, a.dim);
    std::copy(a.data.begin(), a.data.end(), all.data.begin());
    std::copy(b.data.begin(), b.data.end(), all.data.begin() + a.data.size());
    CHECK(hausdorff_dist(a, b) <= diameter(all));
  }
}

TEST_CASE("diameter worked values") {
  CHECK(diameter(line_cloud({4.2})) == 0.0);
  const PointCloud tri(3, 2, {0, 0, 1, 0, 0, 1});
  CHECK(diameter(tri) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("diameter is schedule independent") {
  SplitMix64 rng(127);
  PointCloud big(3000, 3);
  for (double& v : big.data) v = 2.0 * rng.next_double() - 1.0;
  setenv("NLGS_WORKERS", "1", 1);
  const double serial = diameter(big);
  setenv("NLGS_WORKERS", "4", 1);
  const double parallel = diameter(big);
  unsetenv("NLGS_WORKERS");
  CHECK(serial == parallel);
  CHECK(serial <= 2.0 * std::sqrt(3.0));
}
