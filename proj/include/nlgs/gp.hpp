// Gaussian process over graph nodes with the Laplacian diffusion kernel
// U e^{-beta Lambda} U^T, profile-likelihood fitting of (beta, s^2) on a
// grid, the posterior, and expected improvement.
#pragma once

#include <cstddef>
#include <vector>

#include "nlgs/linalg.hpp"

namespace nlgs {

struct DiffusionKernel {
  const Eigensystem* eig = nullptr;  // not owned; must outlive the kernel
  double beta = 1.0;
  double signal_scale = 1.0;  // s^2; scales the kernel and the jitter together
};

// Entries of s^2 U e^{-beta Lambda} U^T restricted to rows x cols.
Matrix kernel_matrix(const DiffusionKernel& k, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

struct GpState {
  std::vector<std::size_t> observed;  // unique node indices
  std::vector<double> values;         // raw objective values
  double noise_variance = 1e-6;       // jitter on the unit-scale kernel
  // Standardization of the raw values, set when fitting.
  double mean = 0.0;
  double stddev = 1.0;
};

// 25 log-spaced lengthscales in [1e-2, 1e2].
std::vector<double> default_beta_grid();

// Grid search over beta with the closed-form scale
// s^2 = y^T (K + sigma_n^2 I)^{-1} y / t on standardized values, maximizing
// the Gaussian log marginal likelihood; exact ties keep the smaller beta.
// Updates the state's standardization. With fewer than two observations, or
// constant observations, every beta ties and the smallest is returned with
// unit scale.
DiffusionKernel fit_hyperparameters(const Eigensystem& eig, GpState& state,
                                    const std::vector<double>& beta_grid);

struct Posterior {
  std::vector<double> mean;
  std::vector<double> std;
};

// Posterior on the standardized scale: mean = k(x, X)[K + sigma_n^2 I]^{-1} y,
// variance = s^2 (k(x,x) - k(x,X)[K + sigma_n^2 I]^{-1} k(X,x)), floored at
// zero before the square root. The signal scale cancels in the mean.
Posterior gp_posterior_standardized(const DiffusionKernel& k, const GpState& state,
                                    const std::vector<std::size_t>& query);

// Same, mapped back to the raw scale of the observations.
Posterior gp_posterior(const DiffusionKernel& k, const GpState& state,
                       const std::vector<std::size_t>& query);

// sigma [Gamma Phi(Gamma) + phi(Gamma)] with Gamma = (f_best - mu) / sigma
// (minimization). Entries with sigma < 1e-12 get zero.
std::vector<double> expected_improvement(const std::vector<double>& mean,
                                         const std::vector<double>& std, double f_best);

double normal_cdf(double z);
double normal_pdf(double z);

}  // namespace nlgs
