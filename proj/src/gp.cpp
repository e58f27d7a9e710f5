#include "nlgs/gp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nlgs {

namespace {

// Rows of U for the given node indices.
Matrix slice_rows(const Eigensystem& eig, const std::vector<std::size_t>& idx) {
  const std::size_t n = eig.lambda.size();
  Matrix out(idx.size(), n);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= n) throw std::invalid_argument("kernel: node index out of range");
    for (std::size_t k = 0; k < n; ++k) out(a, k) = eig.u(idx[a], k);
  }
  return out;
}

std::vector<double> decay_weights(const Eigensystem& eig, double beta) {
  std::vector<double> w(eig.lambda.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = std::exp(-beta * eig.lambda[k]);
  return w;
}

Matrix weighted_gram(const Matrix& rows, const Matrix& cols,
                     const std::vector<double>& w, double scale) {
  Matrix out(rows.rows(), cols.rows());
  for (std::size_t a = 0; a < rows.rows(); ++a) {
    for (std::size_t b = 0; b < cols.rows(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) s += rows(a, k) * w[k] * cols(b, k);
      out(a, b) = scale * s;
    }
  }
  return out;
}

void standardize(GpState& state) {
  const std::size_t t = state.values.size();
  double mean = 0.0;
  for (double v : state.values) mean += v;
  mean /= static_cast<double>(t);
  double var = 0.0;
  for (double v : state.values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(t);
  state.mean = mean;
  state.stddev = std::sqrt(var) > 1e-12 ? std::sqrt(var) : 1.0;
}

}  // namespace

Matrix kernel_matrix(const DiffusionKernel& k, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  if (k.eig == nullptr) throw std::invalid_argument("kernel_matrix: no eigensystem");
  const std::vector<double> w = decay_weights(*k.eig, k.beta);
  return weighted_gram(slice_rows(*k.eig, rows), slice_rows(*k.eig, cols), w,
                       k.signal_scale);
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid(25);
  for (int i = 0; i < 25; ++i)
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 4.0 * i / 24.0);
  return grid;
}

DiffusionKernel fit_hyperparameters(const Eigensystem& eig, GpState& state,
                                    const std::vector<double>& beta_grid) {
  if (beta_grid.empty()) throw std::invalid_argument("fit_hyperparameters: empty grid");
  if (state.observed.size() != state.values.size())
    throw std::invalid_argument("fit_hyperparameters: index/value length mismatch");

  standardize(state);
  const std::size_t t = state.values.size();
  DiffusionKernel best{&eig, beta_grid.front(), 1.0};
  if (t < 2) return best;

  std::vector<double> y(t);
  double y_max = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    y[i] = (state.values[i] - state.mean) / state.stddev;
    y_max = std::max(y_max, std::abs(y[i]));
  }
  if (y_max < 1e-14) return best;  // constant data: every beta ties

  const Matrix rows = slice_rows(eig, state.observed);
  double best_lml = -std::numeric_limits<double>::infinity();
  for (double beta : beta_grid) {
    const std::vector<double> w = decay_weights(eig, beta);
    Matrix m = weighted_gram(rows, rows, w, 1.0);
    for (std::size_t i = 0; i < t; ++i) m(i, i) += state.noise_variance;
    const Matrix l = cholesky(m);
    const std::vector<double> alpha = cholesky_solve(l, y);
    double quad = 0.0;
    for (std::size_t i = 0; i < t; ++i) quad += y[i] * alpha[i];
    const double s2 = quad / static_cast<double>(t);
    double logdet = 0.0;
    for (std::size_t i = 0; i < t; ++i) logdet += std::log(l(i, i));
    logdet *= 2.0;
    const double lml =
        -0.5 * (static_cast<double>(t) * std::log(s2) + logdet + static_cast<double>(t) +
                static_cast<double>(t) * std::log(2.0 * std::numbers::pi));
    if (lml > best_lml) {
      best_lml = lml;
      best.beta = beta;
      best.signal_scale = s2;
    }
  }
  return best;
}

Posterior gp_posterior_standardized(const DiffusionKernel& k, const GpState& state,
                                    const std::vector<std::size_t>& query) {
  if (k.eig == nullptr) throw std::invalid_argument("gp_posterior: no eigensystem");
  if (state.observed.empty()) throw std::invalid_argument("gp_posterior: no observations");

  const std::size_t t = state.observed.size();
  const std::vector<double> w = decay_weights(*k.eig, k.beta);
  const Matrix obs_rows = slice_rows(*k.eig, state.observed);
  const Matrix query_rows = slice_rows(*k.eig, query);

  Matrix m = weighted_gram(obs_rows, obs_rows, w, 1.0);
  for (std::size_t i = 0; i < t; ++i) m(i, i) += state.noise_variance;
  const Matrix l = cholesky(m);

  std::vector<double> y(t);
  for (std::size_t i = 0; i < t; ++i)
    y[i] = (state.values[i] - state.mean) / state.stddev;
  const std::vector<double> alpha = cholesky_solve(l, y);

  const Matrix cross = weighted_gram(query_rows, obs_rows, w, 1.0);
  const double s = std::sqrt(k.signal_scale);

  Posterior post;
  post.mean.resize(query.size());
  post.std.resize(query.size());
  std::vector<double> q(t);
  for (std::size_t i = 0; i < query.size(); ++i) {
    for (std::size_t j = 0; j < t; ++j) q[j] = cross(i, j);
    double mu = 0.0;
    for (std::size_t j = 0; j < t; ++j) mu += q[j] * alpha[j];
    post.mean[i] = mu;

    double prior = 0.0;
    for (std::size_t kk = 0; kk < w.size(); ++kk)
      prior += query_rows(i, kk) * w[kk] * query_rows(i, kk);
    const std::vector<double> z = forward_solve(l, q);
    double reduction = 0.0;
    for (double v : z) reduction += v * v;
    post.std[i] = s * std::sqrt(std::max(0.0, prior - reduction));
  }
  return post;
}

Posterior gp_posterior(const DiffusionKernel& k, const GpState& state,
                       const std::vector<std::size_t>& query) {
  Posterior post = gp_posterior_standardized(k, state, query);
  for (std::size_t i = 0; i < post.mean.size(); ++i) {
    post.mean[i] = state.mean + state.stddev * post.mean[i];
    post.std[i] = state.stddev * post.std[i];
  }
  return post;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

std::vector<double> expected_improvement(const std::vector<double>& mean,
                                         const std::vector<double>& std, double f_best) {
  if (mean.size() != std.size())
    throw std::invalid_argument("expected_improvement: length mismatch");
  std::vector<double> ei(mean.size(), 0.0);
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double sigma = std[i];
    if (sigma < 1e-12) continue;
    const double gamma = (f_best - mean[i]) / sigma;
    ei[i] = sigma * (gamma * normal_cdf(gamma) + normal_pdf(gamma));
  }
  return ei;
}

}  // namespace nlgs
