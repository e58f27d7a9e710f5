// The Blanusa isometric embedding of the hyperbolic plane into E^6, built
// from the smooth bump chi(t) = sin(pi t) exp(-1/sin^2(pi t)) and its
// normalized antiderivative. Inputs are points of the (R^2, g_-1) chart,
// i.e. R^2 with metric dx^2 + e^{2x} dy^2.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nlgs {

// chi extended by zero at the integers (the limit value).
double chi(double t);

struct BlanusaEmbedding {
  double a = 0.0;    // integral of chi over one half-period
  double g1 = 0.0;   // sup_[-2,2] |d/dx sinh(x) psi1(x)|
  double g2 = 0.0;   // sup_[-2,2] |d/dx sinh(x) psi2(x)|
  double c = 0.0;    // 2 max(g1, g2)
  double eps = 0.0;  // (g1^2 + g2^2) / c^2, in (0, 1)

  int quadrature_res = 0;
  double grid_step = 0.0;

  bool ready() const { return !igrid.empty(); }

  // psi1(s) = sqrt(I(1+s)/a), psi2(s) = sqrt(I(s)/a) where I is the
  // antiderivative of chi; I is even with period 2, so lookups reduce into
  // the tabulated [0, 1] range.
  double psi1(double s) const;
  double psi2(double s) const;

  // Tabulated antiderivative on [0, 1], m_ + 1 samples.
  std::vector<double> igrid;
  std::size_t m = 0;

  double integral_at(double w) const;      // interpolated I(w), any w
  double integral_at_index(long j) const;  // exact I(j / m), any integer j
};

// Computes every constant: the normalizer by composite Simpson quadrature
// (with a doubled-resolution convergence check), the antiderivative table by
// cumulative trapezoids at the given grid step, and g1/g2 as the largest
// absolute central difference of sinh(x) psi_i(x) over [-2, 2].
// Requires quadrature_res >= 1000 and 0 < grid_step <= 1e-4.
BlanusaEmbedding compute_constants(int quadrature_res = 10000, double grid_step = 1e-5);

// The embedding map (R^2, g_-1) -> E^6.
std::array<double, 6> blanusa_map(const BlanusaEmbedding& emb,
                                  const std::array<double, 2>& p);

}  // namespace nlgs
