// Gromov-Hausdorff upper bounds between unit balls of the three model
// spaces: the analytic Euclidean-spherical bounds, and sweep-based estimates
// against the Blanusa image of the hyperbolic ball. The sweeps place the
// Euclidean (or spherical) cloud on every choice of basis axes of E^6, slide
// it along one axis at a time over an offset grid, and keep the smallest
// Hausdorff distance seen.
#pragma once

#include <optional>
#include <string>

#include "nlgs/blanusa.hpp"
#include "nlgs/hausdorff.hpp"
#include "nlgs/model_space.hpp"

namespace nlgs {

// Unit-ball discretizations. Euclidean: polar grid, D=2. Hypersphere:
// geodesic polar grid around the pole, D=3. Hyperboloid: polar tangent grid
// over the slightly shrunk ball r in [1e-8, 0.97] pushed through the origin
// exponential map and the Blanusa embedding, D=6 (requires emb).
PointCloud sample_ball(SpaceKind kind, int res_r, int res_t,
                       const BlanusaEmbedding* emb = nullptr);

struct GhEstimateOptions {
  int res_r = 200;  // radial/latitudinal resolution of the swept cloud
  int res_t = 200;  // angular resolution of the swept cloud
  int h_res_r = 200;
  int h_res_t = 200;
  int offset_steps = 100;  // offsets uniform over [-0.5, 0.5]
};

// Estimate for the Euclidean-hyperbolic pair: 15 unordered axis pairs host
// the planar cloud, each slid along all 6 axes.
double estimate_gh_eh(const BlanusaEmbedding& emb, const GhEstimateOptions& opt = {});

// Estimate for the spherical-hyperbolic pair: 20 unordered axis triples, the
// cloud and its negation, slid along all 6 axes.
double estimate_gh_sh(const BlanusaEmbedding& emb, const GhEstimateOptions& opt = {});

// Closed-form bounds for the Euclidean-spherical pair.
struct EsBounds {
  double lower;  // (1 - cos 1) / 2
  double upper;  // ((1 - sin 1)^2 + (1 - cos 1)^2) / (2 - 2 cos 1)
};
EsBounds analytic_es_bounds();

enum class GhProvenance { analytic, estimated, paper_preset };

// Pairwise distances between distinct factor kinds, plus the constant bound
// for signatures that differ by one extra factor. All entries lie in (0, 1].
struct GhTable {
  double e_s = 0.0;
  double e_h = 0.0;
  double s_h = 0.0;
  GhProvenance prov_e_s = GhProvenance::paper_preset;
  GhProvenance prov_e_h = GhProvenance::paper_preset;
  GhProvenance prov_s_h = GhProvenance::paper_preset;
  double cross_dimension = 1.0;

  double pair_dist(SpaceKind a, SpaceKind b) const;
  void validate() const;  // throws if any entry leaves (0, 1]
};

enum class GhTableMode { paper_preset, recompute };

// paper_preset fills the tabulated two-decimal values; recompute runs the
// analytic bound and both sweeps (needs constants).
GhTable build_gh_table(GhTableMode mode, const BlanusaEmbedding* emb = nullptr,
                       const GhEstimateOptions& opt = {});

std::string gh_table_to_json(const GhTable& table);
GhTable gh_table_from_json(const std::string& text);

}  // namespace nlgs
