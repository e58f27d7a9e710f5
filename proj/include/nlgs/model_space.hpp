// Constant-curvature model spaces: the Euclidean plane, the hyperboloid and
// the hypersphere, with exponential maps, geodesic distances and the chain of
// hyperbolic coordinate models used by the embedding pipeline.
//
// Ambient conventions: hyperboloid points are stored time-like-first,
// (x0, x1, ..., xd) with x0 > 0; hypersphere points carry the pole in the
// last coordinate. The hyperboloid-to-disk projection below instead expects
// the sheet coordinate last, so callers on the internal convention permute
// before projecting (see exp0_gminus1 for the composed chain).
#pragma once

#include <array>
#include <vector>

namespace nlgs {

enum class SpaceKind { Euclidean, Hyperboloid, Hypersphere };

struct ModelSpace {
  SpaceKind kind = SpaceKind::Euclidean;
  double curvature = 0.0;  // 0 for E, < 0 for H, > 0 for S
  int dim = 2;             // intrinsic dimension

  static ModelSpace euclidean(int dim = 2) { return {SpaceKind::Euclidean, 0.0, dim}; }
  static ModelSpace hyperboloid(int dim = 2, double k = -1.0) {
    return {SpaceKind::Hyperboloid, k, dim};
  }
  static ModelSpace hypersphere(int dim = 2, double k = 1.0) {
    return {SpaceKind::Hypersphere, k, dim};
  }

  // Ambient coordinate count: d for E, d+1 for H and S.
  int ambient_dim() const { return kind == SpaceKind::Euclidean ? dim : dim + 1; }
};

using Vec = std::vector<double>;

double lorentz_inner(const Vec& x, const Vec& y);
double dot(const Vec& x, const Vec& y);

// Base point of the exponential-map parameterization: the zero vector for E,
// (1/sqrt(-K), 0, ..., 0) for H, (0, ..., 0, 1/sqrt(K)) for S.
Vec origin(const ModelSpace& space);

// Checks the on-manifold constraint (<x,x>_L = 1/K on the upper sheet for H,
// |x|^2 = 1/K for S) to the given tolerance.
bool on_manifold(const ModelSpace& space, const Vec& point, double tol = 1e-8);
void require_on_manifold(const ModelSpace& space, const Vec& point, double tol = 1e-8);

// Exponential map at `base`. The tangent must live in the tangent space at
// base (checked to 1e-8 on the relevant inner product); a zero tangent
// returns base exactly.
Vec exp_map(const ModelSpace& space, const Vec& base, const Vec& tangent);

// Geodesic distance. The arccosh/arccos argument is clamped when it exceeds
// the legal domain by at most 1e-9; beyond that the points are rejected.
double geodesic_dist(const ModelSpace& space, const Vec& x, const Vec& y);

// Hyperbolic coordinate models. The projection takes hyperboloid coordinates
// with the sheet coordinate last.
std::array<double, 2> hyperboloid_to_poincare(const std::array<double, 3>& p);
std::array<double, 2> poincare_to_uhp(const std::array<double, 2>& p);
std::array<double, 2> uhp_to_gminus1(const std::array<double, 2>& p);

// Exponential map at the origin of the hyperbolic plane realized as R^2 with
// metric dx^2 + e^{2x} dy^2: hyperboloid coordinates first, then the disk,
// half-plane and (R^2, g_-1) charts in sequence.
std::array<double, 2> exp0_gminus1(const std::array<double, 2>& v);

// sinh(r)/r and sin(r)/r with the removable singularity handled by a
// three-term series below r = 1e-6.
double sinhc(double r);
double sinc(double r);

}  // namespace nlgs
