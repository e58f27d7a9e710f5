#include "nlgs/blanusa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlgs {

namespace {

double simpson_chi(double lo, double hi, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (hi - lo) / intervals;
  double sum = chi(lo) + chi(hi);
  for (int i = 1; i < intervals; ++i)
    sum += chi(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

double chi(double t) {
  if (std::abs(t - std::round(t)) < 1e-12) return 0.0;
  const double s = std::sin(std::numbers::pi * t);
  return s * std::exp(-1.0 / (s * s));
}

double BlanusaEmbedding::integral_at_index(long j) const {
  const long period = 2 * static_cast<long>(m);
  long r = j % period;
  if (r < 0) r += period;
  if (r > static_cast<long>(m)) r = period - r;
  return igrid[static_cast<std::size_t>(r)];
}

double BlanusaEmbedding::integral_at(double w) const {
  double u = std::fmod(std::abs(w), 2.0);
  if (u > 1.0) u = 2.0 - u;
  const double pos = u * static_cast<double>(m);
  std::size_t j = static_cast<std::size_t>(pos);
  if (j >= m) j = m - 1;
  const double frac = pos - static_cast<double>(j);
  return igrid[j] + frac * (igrid[j + 1] - igrid[j]);
}

double BlanusaEmbedding::psi1(double s) const {
  return std::sqrt(clamp0(integral_at(1.0 + s)) / a);
}

double BlanusaEmbedding::psi2(double s) const {
  return std::sqrt(clamp0(integral_at(s)) / a);
}

BlanusaEmbedding compute_constants(int quadrature_res, double grid_step) {
  if (quadrature_res < 1000)
    throw std::invalid_argument("compute_constants: quadrature_res must be >= 1000");
  if (!(grid_step > 0.0) || grid_step > 1e-4)
    throw std::invalid_argument("compute_constants: grid_step must be in (0, 1e-4]");

  BlanusaEmbedding emb;
  emb.quadrature_res = quadrature_res;
  emb.grid_step = grid_step;

  const double a_coarse = simpson_chi(0.0, 1.0, quadrature_res);
  const double a_fine = simpson_chi(0.0, 1.0, 2 * quadrature_res);
  if (std::abs(a_fine - a_coarse) > 1e-5 * std::abs(a_fine))
    throw std::runtime_error("compute_constants: quadrature did not converge");
  emb.a = a_fine;

  // Antiderivative table on [0, 1] by cumulative trapezoids. The
  // antiderivative is even with period 2 and vanishing period integral, so
  // this table covers every argument after range reduction.
  emb.m = static_cast<std::size_t>(std::llround(1.0 / grid_step));
  const double h = 1.0 / static_cast<double>(emb.m);
  emb.igrid.resize(emb.m + 1);
  emb.igrid[0] = 0.0;
  double prev = chi(0.0);
  for (std::size_t j = 1; j <= emb.m; ++j) {
    const double cur = chi(static_cast<double>(j) * h);
    emb.igrid[j] = emb.igrid[j - 1] + 0.5 * (prev + cur) * h;
    prev = cur;
  }

  // Largest |central difference| of sinh(x) psi_i(x) on a grid over [-2, 2].
  // Grid point i sits at x_i = -2 + i h; the psi arguments land exactly on
  // table indices i - m (for psi1, shifted by +1) and i - 2m (for psi2).
  const long n = 4 * static_cast<long>(emb.m);
  std::vector<double> f1(static_cast<std::size_t>(n) + 1);
  std::vector<double> f2(static_cast<std::size_t>(n) + 1);
  const long m_long = static_cast<long>(emb.m);
  for (long i = 0; i <= n; ++i) {
    const double x = -2.0 + static_cast<double>(i) * h;
    const double sh = std::sinh(x);
    f1[static_cast<std::size_t>(i)] =
        sh * std::sqrt(clamp0(emb.integral_at_index(i - m_long)) / emb.a);
    f2[static_cast<std::size_t>(i)] =
        sh * std::sqrt(clamp0(emb.integral_at_index(i - 2 * m_long)) / emb.a);
  }
  double g1 = 0.0;
  double g2 = 0.0;
  for (long i = 1; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    g1 = std::max(g1, std::abs(f1[k + 1] - f1[k - 1]) / (2.0 * h));
    g2 = std::max(g2, std::abs(f2[k + 1] - f2[k - 1]) / (2.0 * h));
  }
  emb.g1 = g1;
  emb.g2 = g2;
  emb.c = 2.0 * std::max(g1, g2);
  emb.eps = (g1 * g1 + g2 * g2) / (emb.c * emb.c);
  return emb;
}

std::array<double, 6> blanusa_map(const BlanusaEmbedding& emb,
                                  const std::array<double, 2>& p) {
  if (!emb.ready())
    throw std::runtime_error("blanusa_map: constants have not been computed");
  const double x = p[0];
  const double y = p[1];
  const double s = std::asinh(y * std::exp(x));
  const double t = 0.5 * std::log(std::exp(-2.0 * x) + y * y);

  const double p1 = emb.psi1(s);
  const double p2 = emb.psi2(s);
  const double radial = std::sinh(s) / emb.c;
  const double co = std::cos(emb.c * t);
  const double si = std::sin(emb.c * t);

  return {std::sqrt(1.0 - emb.eps * emb.eps) * s,
          t,
          radial * p1 * co,
          radial * p1 * si,
          radial * p2 * co,
          radial * p2 * si};
}

}  // namespace nlgs
