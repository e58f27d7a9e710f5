#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlgs/linalg.hpp"
#include "nlgs/rng.hpp"

using namespace nlgs;

namespace {

Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = 2.0 * rng.next_double() - 1.0;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Matrix reconstruct(const Eigensystem& es) {
  const std::size_t n = es.lambda.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += es.u(i, k) * es.lambda[k] * es.u(j, k);
      m(i, j) = s;
    }
  return m;
}

double orthonormality_error(const Matrix& u) {
  const std::size_t n = u.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(k, i) * u(k, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

TEST_CASE("identity eigendecomposition") {
  const Eigensystem es = eig_sym(Matrix::identity(4));
  for (double l : es.lambda) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-node Laplacian eigenvalues") {
  const double w = 3.5;
  Matrix m(2, 2);
  m(0, 0) = w;
  m(0, 1) = -w;
  m(1, 0) = -w;
  m(1, 1) = w;
  const Eigensystem es = eig_sym(m);
  CHECK(es.lambda[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.lambda[1] == doctest::Approx(2.0 * w).epsilon(1e-12));
}

TEST_CASE("random symmetric reconstruction and orthonormality") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Matrix m = random_symmetric(20, seed);
    const Eigensystem es = eig_sym(m);
    CHECK(max_abs_diff(reconstruct(es), m) <= 1e-7);
    CHECK(orthonormality_error(es.u) <= 1e-8);
    for (std::size_t i = 1; i < es.lambda.size(); ++i)
      CHECK(es.lambda[i - 1] <= es.lambda[i]);
  }
}

TEST_CASE("50x50 residual meets the eigensolver contract") {
  const Matrix m = random_symmetric(50, 99);
  const Eigensystem es = eig_sym(m);
  CHECK(max_abs_diff(reconstruct(es), m) <= 1e-7);
}

TEST_CASE("asymmetric input is rejected") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_AS(eig_sym(m), std::invalid_argument);
}

TEST_CASE("eigenvector residual L u = lambda u") {
  const Matrix m = random_symmetric(12, 7);
  const Eigensystem es = eig_sym(m);
  const std::size_t n = 12;
  for (std::size_t k = 0; k < n; ++k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * es.u(j, k);
      worst = std::max(worst, std::abs(s - es.lambda[k] * es.u(i, k)));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("cholesky solves a known SPD system") {
  Matrix m(2, 2);
  m(0, 0) = 4.0;
  m(0, 1) = 2.0;
  m(1, 0) = 2.0;
  m(1, 1) = 3.0;
  const Matrix l = cholesky(m);
  const std::vector<double> x = cholesky_solve(l, {8.0, 7.0});
  // solution of [[4,2],[2,3]] x = [8,7]
  CHECK(x[0] == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("cholesky rejects an indefinite matrix") {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = 2.0;
  m(1, 0) = 2.0;
  m(1, 1) = 1.0;
  CHECK_THROWS_AS(cholesky(m), std::runtime_error);
}
