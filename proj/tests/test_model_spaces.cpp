#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "nlgs/model_space.hpp"
#include "nlgs/rng.hpp"

using namespace nlgs;

namespace {

// Independent distance oracle for the chart (R^2, dx^2 + e^{2x} dy^2): map to
// the half-plane by (x, y) -> (y, e^{-x}) and use the closed-form half-plane
// distance.
double gminus1_dist_oracle(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  const double u1 = p[1], v1 = std::exp(-p[0]);
  const double u2 = q[1], v2 = std::exp(-q[0]);
  const double du = u1 - u2, dv = v1 - v2;
  return std::acosh(1.0 + (du * du + dv * dv) / (2.0 * v1 * v2));
}

// Numeric length of a chart path under dx^2 + e^{2x} dy^2, midpoint rule.
double chart_path_length(const std::vector<std::array<double, 2>>& path) {
  double len = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double dx = path[i][0] - path[i - 1][0];
    const double dy = path[i][1] - path[i - 1][1];
    const double xm = 0.5 * (path[i][0] + path[i - 1][0]);
    len += std::sqrt(dx * dx + std::exp(2.0 * xm) * dy * dy);
  }
  return len;
}

Vec random_tangent_at(const ModelSpace& space, const Vec& base, SplitMix64& rng,
                      double max_norm) {
  const std::size_t n = base.size();
  Vec v(n);
  for (double& c : v) c = 2.0 * rng.next_double() - 1.0;
  // Project onto the tangent space at base.
  if (space.kind == SpaceKind::Hyperboloid) {
    const double ip = lorentz_inner(base, v);
    const double bb = lorentz_inner(base, base);  // 1/K < 0
    for (std::size_t j = 0; j < n; ++j) v[j] -= ip / bb * base[j];
  } else if (space.kind == SpaceKind::Hypersphere) {
    const double ip = dot(base, v);
    const double bb = dot(base, base);
    for (std::size_t j = 0; j < n; ++j) v[j] -= ip / bb * base[j];
  }
  double norm2 = space.kind == SpaceKind::Hyperboloid ? lorentz_inner(v, v) : dot(v, v);
  const double norm = std::sqrt(std::max(norm2, 1e-300));
  const double scale = max_norm * rng.next_double() / norm;
  for (double& c : v) c *= scale;
  return v;
}

double tangent_norm(const ModelSpace& space, const Vec& v) {
  const double n2 = space.kind == SpaceKind::Hyperboloid ? lorentz_inner(v, v) : dot(v, v);
  return std::sqrt(std::max(0.0, n2));
}

}  // namespace

TEST_CASE("lorentz inner product") {
  CHECK(lorentz_inner({1, 0, 0}, {1, 0, 0}) == -1.0);
  CHECK(lorentz_inner({1, 0, 0}, {0, 1, 0}) == 0.0);
  CHECK(lorentz_inner({2, 1, 1}, {1, 2, 3}) == 3.0);
  CHECK_THROWS_AS(lorentz_inner({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("exponential map worked values") {
  CHECK(exp_map(ModelSpace::euclidean(), {1, 2}, {3, 4}) == Vec{4, 6});

  const double t = 0.7;
  const Vec h = exp_map(ModelSpace::hyperboloid(), {1, 0, 0}, {0, t, 0});
  CHECK(h[0] == doctest::Approx(std::cosh(t)).epsilon(1e-14));
  CHECK(h[1] == doctest::Approx(std::sinh(t)).epsilon(1e-14));
  CHECK(h[2] == 0.0);

  const double u = 0.5;
  const Vec s = exp_map(ModelSpace::hypersphere(), {0, 0, 1}, {u, 0, 0});
  CHECK(s[0] == doctest::Approx(std::sin(u)).epsilon(1e-14));
  CHECK(s[1] == 0.0);
  CHECK(s[2] == doctest::Approx(std::cos(u)).epsilon(1e-14));
}

TEST_CASE("zero tangent returns the base exactly") {
  const Vec base{std::cosh(0.3), std::sinh(0.3), 0.0};
  const Vec out = exp_map(ModelSpace::hyperboloid(), base, {0, 0, 0});
  CHECK(out[0] == base[0]);
  CHECK(out[1] == base[1]);
  CHECK(out[2] == base[2]);
}

TEST_CASE("non-tangent vectors are rejected") {
  CHECK_THROWS_AS(exp_map(ModelSpace::hyperboloid(), {1, 0, 0}, {0.5, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exp_map(ModelSpace::hypersphere(), {0, 0, 1}, {0, 0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("geodesic distance worked values") {
  CHECK(geodesic_dist(ModelSpace::euclidean(), {0, 0}, {3, 4}) == 5.0);
  const Vec h = exp_map(ModelSpace::hyperboloid(), {1, 0, 0}, {0, 0.7, 0});
  CHECK(geodesic_dist(ModelSpace::hyperboloid(), {1, 0, 0}, h) ==
        doctest::Approx(0.7).epsilon(1e-12));
  const Vec s = exp_map(ModelSpace::hypersphere(), {0, 0, 1}, {0.5, 0, 0});
  CHECK(geodesic_dist(ModelSpace::hypersphere(), {0, 0, 1}, s) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("off-manifold points are rejected") {
  CHECK_THROWS_AS(geodesic_dist(ModelSpace::hyperboloid(), {1, 0.5, 0}, {1, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("exp/dist round trip across all spaces") {
  SplitMix64 rng(11);
  for (const ModelSpace space :
       {ModelSpace::euclidean(), ModelSpace::hyperboloid(), ModelSpace::hypersphere()}) {
    for (int i = 0; i < 200; ++i) {
      // Random base reached by a first exponential hop from the origin.
      const Vec hop = random_tangent_at(space, origin(space), rng, 1.0);
      const Vec base = exp_map(space, origin(space), hop);
      CHECK(on_manifold(space, base, 1e-8));

      const Vec v = random_tangent_at(space, base, rng, 1.0);
      const Vec end = exp_map(space, base, v);
      CHECK(on_manifold(space, end, 1e-8));
      CHECK(geodesic_dist(space, base, end) ==
            doctest::Approx(tangent_norm(space, v)).epsilon(1e-8));
    }
  }
}

TEST_CASE("geodesic distance is a metric on sampled triples") {
  SplitMix64 rng(23);
  for (const ModelSpace space :
       {ModelSpace::euclidean(), ModelSpace::hyperboloid(), ModelSpace::hypersphere()}) {
    for (int i = 0; i < 1000; ++i) {
      Vec pts[3];
      for (Vec& p : pts)
        p = exp_map(space, origin(space), random_tangent_at(space, origin(space), rng, 1.0));
      const double dab = geodesic_dist(space, pts[0], pts[1]);
      const double dba = geodesic_dist(space, pts[1], pts[0]);
      CHECK(dab == dba);  // symmetry, exact
      const double dac = geodesic_dist(space, pts[0], pts[2]);
      const double dcb = geodesic_dist(space, pts[2], pts[1]);
      CHECK(dab <= dac + dcb + 1e-9);
      CHECK(geodesic_dist(space, pts[0], pts[0]) == 0.0);
    }
  }
}

TEST_CASE("hyperboloid-to-disk projection") {
  const auto center = hyperboloid_to_poincare({0, 0, 1});
  CHECK(center[0] == 0.0);
  CHECK(center[1] == 0.0);

  const auto p = hyperboloid_to_poincare({std::sinh(1.0), 0.0, std::cosh(1.0)});
  CHECK(p[0] == doctest::Approx(0.46211715726000974).epsilon(1e-12));
  CHECK(p[1] == 0.0);

  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Vec tangent{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0, 0.0};
    const Vec hp = exp_map(ModelSpace::hyperboloid(), {1, 0, 0},
                           {0.0, tangent[0], tangent[1]});
    // Internal points are time-like-first; the projection wants it last.
    const auto disk = hyperboloid_to_poincare({hp[1], hp[2], hp[0]});
    CHECK(disk[0] * disk[0] + disk[1] * disk[1] < 1.0);
  }
}

TEST_CASE("disk-to-half-plane transform") {
  const auto origin_img = poincare_to_uhp({0, 0});
  CHECK(origin_img[0] == 0.0);
  CHECK(origin_img[1] == 1.0);

  const auto p = poincare_to_uhp({0.5, 0});
  CHECK(p[0] == 0.0);
  CHECK(p[1] == doctest::Approx(3.0).epsilon(1e-14));

  SplitMix64 rng(6);
  for (int i = 0; i < 100; ++i) {
    double x, y;
    do {
      x = 2.0 * rng.next_double() - 1.0;
      y = 2.0 * rng.next_double() - 1.0;
    } while (x * x + y * y >= 1.0);
    CHECK(poincare_to_uhp({x, y})[1] > 0.0);
  }
  CHECK_THROWS_AS(poincare_to_uhp({1.0, 0.0}), std::domain_error);
}

TEST_CASE("half-plane-to-chart transform and its inverse") {
  const auto a = uhp_to_gminus1({0, 1});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == 0.0);
  const auto b = uhp_to_gminus1({2.0, std::exp(1.0)});
  CHECK(b[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(b[1] == 2.0);

  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const double u = 4.0 * rng.next_double() - 2.0;
    const double v = 0.1 + 3.0 * rng.next_double();
    const auto g = uhp_to_gminus1({u, v});
    // Analytic inverse (x, y) -> (y, e^{-x}).
    CHECK(g[1] == doctest::Approx(u).epsilon(1e-12));
    CHECK(std::exp(-g[0]) == doctest::Approx(v).epsilon(1e-12));
  }
  CHECK_THROWS_AS(uhp_to_gminus1({0.0, 0.0}), std::domain_error);
}

TEST_CASE("chart exponential map fixes the origin") {
  const auto z = exp0_gminus1({0, 0});
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
}

TEST_CASE("chart exponential map matches the stepwise chain") {
  const double r = 0.5;
  const std::array<double, 3> hyp = {r * sinhc(r), 0.0, std::cosh(r)};
  const auto expected = uhp_to_gminus1(poincare_to_uhp(hyperboloid_to_poincare(hyp)));
  const auto got = exp0_gminus1({0.5, 0.0});
  CHECK(got[0] == expected[0]);
  CHECK(got[1] == expected[1]);
}

TEST_CASE("chart exponential map is radially isometric") {
  SplitMix64 rng(17);
  for (int i = 0; i < 20; ++i) {
    double vx, vy;
    do {
      vx = 2.0 * rng.next_double() - 1.0;
      vy = 2.0 * rng.next_double() - 1.0;
    } while (vx * vx + vy * vy > 1.0 || vx * vx + vy * vy < 1e-4);
    const double norm = std::sqrt(vx * vx + vy * vy);

    // Numeric length of the radial curve s -> exp0(s v).
    const int steps = 4000;
    std::vector<std::array<double, 2>> path;
    path.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
      const double s = static_cast<double>(k) / steps;
      path.push_back(exp0_gminus1({s * vx, s * vy}));
    }
    CHECK(chart_path_length(path) == doctest::Approx(norm).epsilon(1e-3));
    CHECK(gminus1_dist_oracle({0, 0}, path.back()) ==
          doctest::Approx(norm).epsilon(1e-6));
  }
}

TEST_CASE("coordinate chain preserves hyperboloid distances") {
  SplitMix64 rng(29);
  const ModelSpace hspace = ModelSpace::hyperboloid();
  for (int i = 0; i < 50; ++i) {
    Vec pts[2];
    std::array<double, 2> chart[2];
    for (int k = 0; k < 2; ++k) {
      const Vec v = random_tangent_at(hspace, origin(hspace), rng, 1.5);
      pts[k] = exp_map(hspace, origin(hspace), v);
      const auto disk = hyperboloid_to_poincare({pts[k][1], pts[k][2], pts[k][0]});
      chart[k] = uhp_to_gminus1(poincare_to_uhp(disk));
    }
    const double ambient = geodesic_dist(hspace, pts[0], pts[1]);
    CHECK(gminus1_dist_oracle(chart[0], chart[1]) ==
          doctest::Approx(ambient).epsilon(1e-3));
  }
}

TEST_CASE("chain preserves distance along transported geodesics") {
  // Interpolate the geodesic between two hyperboloid points, push it through
  // the chart chain, and integrate its length under the chart metric.
  SplitMix64 rng(31);
  const ModelSpace hspace = ModelSpace::hyperboloid();
  for (int trial = 0; trial < 10; ++trial) {
    const Vec va = random_tangent_at(hspace, origin(hspace), rng, 1.2);
    const Vec vb = random_tangent_at(hspace, origin(hspace), rng, 1.2);
    const Vec a = exp_map(hspace, origin(hspace), va);
    const Vec b = exp_map(hspace, origin(hspace), vb);
    const double d = geodesic_dist(hspace, a, b);
    if (d < 1e-3) continue;

    const int steps = 2000;
    std::vector<std::array<double, 2>> path;
    path.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
      const double s = static_cast<double>(k) / steps;
      Vec g(3);
      const double w0 = std::sinh((1.0 - s) * d) / std::sinh(d);
      const double w1 = std::sinh(s * d) / std::sinh(d);
      for (int j = 0; j < 3; ++j)
        g[static_cast<std::size_t>(j)] =
            w0 * a[static_cast<std::size_t>(j)] + w1 * b[static_cast<std::size_t>(j)];
      const auto disk = hyperboloid_to_poincare({g[1], g[2], g[0]});
      path.push_back(uhp_to_gminus1(poincare_to_uhp(disk)));
    }
    CHECK(chart_path_length(path) == doctest::Approx(d).epsilon(1e-3));
  }
}

TEST_CASE("series branch of sinhc/sinc agrees with the direct form") {
  CHECK(sinhc(1e-7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sinc(1e-7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sinhc(2e-6) == doctest::Approx(std::sinh(2e-6) / 2e-6).epsilon(1e-14));
  CHECK(sinc(2e-6) == doctest::Approx(std::sin(2e-6) / 2e-6).epsilon(1e-14));
}
