#include "nlgs/gh.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "nlgs/parallel.hpp"
#include "nlgs/rng.hpp"

namespace nlgs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fixed seed for the storage-order shuffles that make the early break
// effective on grid-structured clouds. The sweep result does not depend on
// it.
constexpr std::uint64_t kSweepShuffleSeed = 0x5EEDULL;

// Column-major cloud in E^6 with precomputed residual norms.
struct FixedCloud {
  std::array<std::vector<double>, 6> col;
  std::size_t n = 0;
};

FixedCloud to_fixed(const PointCloud& cloud, const std::vector<std::size_t>& order) {
  FixedCloud f;
  f.n = cloud.size;
  for (int k = 0; k < 6; ++k) f.col[k].resize(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    const double* row = cloud.row(order[i]);
    for (int k = 0; k < 6; ++k) f.col[k][i] = row[k];
  }
  return f;
}

// Symmetric Hausdorff distance between a K-coordinate moved cloud and a
// fixed cloud whose off-plane mass is folded into `base`. Early-breaks the
// inner scans against the running maximum, and returns as soon as the
// running maximum proves the final value can only exceed `bound` (callers
// discard such candidates). Both clouds must arrive pre-shuffled.
template <int K>
double hausdorff_bounded(const std::array<const double*, K>& mc, std::size_t nm,
                         const std::array<const double*, K>& fc, const double* base,
                         std::size_t nf, double bound) {
  const double bound2 = bound * bound;
  double cmax2 = 0.0;

  for (std::size_t p = 0; p < nm; ++p) {
    double pm[K];
    for (int i = 0; i < K; ++i) pm[i] = mc[i][p];
    double cmin2 = std::numeric_limits<double>::infinity();
    bool skipped = false;
    for (std::size_t q = 0; q < nf; ++q) {
      double d2 = base[q];
      for (int i = 0; i < K; ++i) {
        const double diff = pm[i] - fc[i][q];
        d2 += diff * diff;
      }
      if (d2 < cmax2) {
        skipped = true;
        break;
      }
      if (d2 < cmin2) cmin2 = d2;
    }
    if (!skipped && cmin2 > cmax2) {
      cmax2 = cmin2;
      if (cmax2 > bound2) return std::sqrt(cmax2);
    }
  }

  for (std::size_t q = 0; q < nf; ++q) {
    double fq[K];
    for (int i = 0; i < K; ++i) fq[i] = fc[i][q];
    const double b = base[q];
    const double planar_cut = cmax2 - b;  // inner break threshold
    double cmin2 = std::numeric_limits<double>::infinity();
    bool skipped = false;
    for (std::size_t p = 0; p < nm; ++p) {
      double d2 = 0.0;
      for (int i = 0; i < K; ++i) {
        const double diff = mc[i][p] - fq[i];
        d2 += diff * diff;
      }
      if (d2 < planar_cut) {
        skipped = true;
        break;
      }
      if (d2 < cmin2) cmin2 = d2;
    }
    const double total = b + cmin2;
    if (!skipped && total > cmax2) {
      cmax2 = total;
      if (cmax2 > bound2) return std::sqrt(cmax2);
    }
  }
  return std::sqrt(cmax2);
}

std::vector<double> offset_grid(int steps) {
  if (steps < 2) throw std::invalid_argument("offset_steps must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int l = 0; l < steps; ++l)
    out[static_cast<std::size_t>(l)] = -0.5 + static_cast<double>(l) / (steps - 1);
  return out;
}

// One sweep candidate: an axis subset hosting the moved cloud, a sign for
// the cloud, and a single-axis offset.
struct Candidate {
  int axes[3];
  int n_axes;
  double sign;
  int offset_axis;
  double offset;
};

double run_sweep(const FixedCloud& fixed, const std::vector<std::vector<double>>& moved,
                 const std::vector<Candidate>& candidates) {
  const std::size_t nm = moved[0].size();
  const std::size_t nf = fixed.n;
  const std::size_t n_coords = moved.size();

  // Residual squared norms per axis subset, shared across offsets.
  // Subsets are keyed by a 6-bit mask.
  std::vector<std::vector<double>> residual(64);
  for (const Candidate& cand : candidates) {
    int mask = 0;
    for (int i = 0; i < cand.n_axes; ++i) mask |= 1 << cand.axes[i];
    if (!residual[static_cast<std::size_t>(mask)].empty()) continue;
    std::vector<double>& sq = residual[static_cast<std::size_t>(mask)];
    sq.assign(nf, 0.0);
    for (int k = 0; k < 6; ++k) {
      if (mask & (1 << k)) continue;
      const double* c = fixed.col[static_cast<std::size_t>(k)].data();
      for (std::size_t q = 0; q < nf; ++q) sq[q] += c[q] * c[q];
    }
  }

  std::atomic<double> best{std::numeric_limits<double>::infinity()};
  struct Scratch {
    std::array<std::vector<double>, 3> coord;
    std::vector<double> base;
  };
  std::vector<Scratch> scratch(std::max<std::size_t>(1, worker_count()));

  parallel_tasks(candidates.size(), [&](std::size_t t, std::size_t w) {
    const Candidate& cand = candidates[t];
    int mask = 0;
    for (int i = 0; i < cand.n_axes; ++i) mask |= 1 << cand.axes[i];
    const std::vector<double>& sq = residual[static_cast<std::size_t>(mask)];
    Scratch& sc = scratch[w];

    // Moved coordinates with the sign applied, and the offset folded in when
    // it lands on a hosted axis.
    int shifted_coord = -1;
    for (int i = 0; i < cand.n_axes; ++i)
      if (cand.axes[i] == cand.offset_axis) shifted_coord = i;

    std::array<const double*, 3> mc{};
    for (int i = 0; i < cand.n_axes; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      const std::vector<double>& src = moved[ii];
      if (cand.sign == 1.0 && i != shifted_coord) {
        mc[ii] = src.data();
        continue;
      }
      std::vector<double>& buf = sc.coord[ii];
      buf.resize(nm);
      const double add = (i == shifted_coord) ? cand.offset : 0.0;
      for (std::size_t p = 0; p < nm; ++p) buf[p] = cand.sign * src[p] + add;
      mc[ii] = buf.data();
    }

    // Off-plane base: residual mass, adjusted when the offset axis is not
    // hosted.
    const double* base = sq.data();
    if (shifted_coord < 0) {
      sc.base.resize(nf);
      const double* ck = fixed.col[static_cast<std::size_t>(cand.offset_axis)].data();
      const double d = cand.offset;
      for (std::size_t q = 0; q < nf; ++q)
        sc.base[q] = sq[q] - 2.0 * d * ck[q] + d * d;
      base = sc.base.data();
    }

    std::array<const double*, 3> fc{};
    for (int i = 0; i < cand.n_axes; ++i)
      fc[static_cast<std::size_t>(i)] =
          fixed.col[static_cast<std::size_t>(cand.axes[i])].data();

    const double bound = best.load(std::memory_order_relaxed);
    double value;
    if (n_coords == 2) {
      std::array<const double*, 2> mc2{mc[0], mc[1]};
      std::array<const double*, 2> fc2{fc[0], fc[1]};
      value = hausdorff_bounded<2>(mc2, nm, fc2, base, nf, bound);
    } else {
      value = hausdorff_bounded<3>(mc, nm, fc, base, nf, bound);
    }
    // A value above the bound means the evaluation aborted early and is only
    // a lower bound for that candidate; it cannot hold the minimum.
    if (value <= bound) atomic_min(best, value);
  });

  return best.load();
}

}  // namespace

PointCloud sample_ball(SpaceKind kind, int res_r, int res_t, const BlanusaEmbedding* emb) {
  if (res_r < 2 || res_t < 2)
    throw std::invalid_argument("sample_ball: resolutions must be >= 2");
  const std::size_t n = static_cast<std::size_t>(res_r) * static_cast<std::size_t>(res_t);

  switch (kind) {
    case SpaceKind::Euclidean: {
      PointCloud cloud(n, 2);
      std::size_t i = 0;
      for (int ir = 0; ir < res_r; ++ir) {
        const double r = static_cast<double>(ir) / (res_r - 1);
        for (int it = 0; it < res_t; ++it) {
          const double t = kTwoPi * it / res_t;
          double* row = cloud.row(i++);
          row[0] = r * std::cos(t);
          row[1] = r * std::sin(t);
        }
      }
      return cloud;
    }
    case SpaceKind::Hypersphere: {
      PointCloud cloud(n, 3);
      std::size_t i = 0;
      for (int ib = 0; ib < res_r; ++ib) {
        const double beta = static_cast<double>(ib) / (res_r - 1);
        for (int ia = 0; ia < res_t; ++ia) {
          const double alpha = kTwoPi * ia / res_t;
          double* row = cloud.row(i++);
          row[0] = std::sin(beta) * std::cos(alpha);
          row[1] = std::sin(beta) * std::sin(alpha);
          row[2] = std::cos(beta);
        }
      }
      return cloud;
    }
    case SpaceKind::Hyperboloid: {
      if (emb == nullptr || !emb->ready())
        throw std::invalid_argument("sample_ball: hyperbolic sampling needs constants");
      // Shrunk radial range keeps the chart transforms away from their
      // numerically unstable rim.
      const double r_lo = 1e-8;
      const double r_hi = 0.97;
      PointCloud cloud(n, 6);
      std::size_t i = 0;
      for (int ir = 0; ir < res_r; ++ir) {
        const double r = r_lo + (r_hi - r_lo) * static_cast<double>(ir) / (res_r - 1);
        for (int it = 0; it < res_t; ++it) {
          const double t = kTwoPi * it / res_t;
          const std::array<double, 2> chart =
              exp0_gminus1({r * std::cos(t), r * std::sin(t)});
          const std::array<double, 6> image = blanusa_map(*emb, chart);
          double* row = cloud.row(i++);
          for (int k = 0; k < 6; ++k) row[k] = image[static_cast<std::size_t>(k)];
        }
      }
      return cloud;
    }
  }
  throw std::logic_error("sample_ball: unknown kind");
}

double estimate_gh_eh(const BlanusaEmbedding& emb, const GhEstimateOptions& opt) {
  const PointCloud e_cloud = sample_ball(SpaceKind::Euclidean, opt.res_r, opt.res_t);
  const PointCloud h_cloud =
      sample_ball(SpaceKind::Hyperboloid, opt.h_res_r, opt.h_res_t, &emb);

  const auto e_order = shuffled_indices(e_cloud.size, kSweepShuffleSeed);
  const auto h_order = shuffled_indices(h_cloud.size, kSweepShuffleSeed + 1);
  const FixedCloud fixed = to_fixed(h_cloud, h_order);

  std::vector<std::vector<double>> moved(2, std::vector<double>(e_cloud.size));
  for (std::size_t i = 0; i < e_cloud.size; ++i) {
    const double* row = e_cloud.row(e_order[i]);
    moved[0][i] = row[0];
    moved[1][i] = row[1];
  }

  const std::vector<double> offsets = offset_grid(opt.offset_steps);
  std::vector<Candidate> candidates;
  candidates.reserve(15u * 6u * offsets.size());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        for (double off : offsets)
          candidates.push_back(Candidate{{i, j, -1}, 2, 1.0, k, off});

  return run_sweep(fixed, moved, candidates);
}

double estimate_gh_sh(const BlanusaEmbedding& emb, const GhEstimateOptions& opt) {
  const PointCloud s_cloud = sample_ball(SpaceKind::Hypersphere, opt.res_r, opt.res_t);
  const PointCloud h_cloud =
      sample_ball(SpaceKind::Hyperboloid, opt.h_res_r, opt.h_res_t, &emb);

  const auto s_order = shuffled_indices(s_cloud.size, kSweepShuffleSeed + 2);
  const auto h_order = shuffled_indices(h_cloud.size, kSweepShuffleSeed + 3);
  const FixedCloud fixed = to_fixed(h_cloud, h_order);

  std::vector<std::vector<double>> moved(3, std::vector<double>(s_cloud.size));
  for (std::size_t i = 0; i < s_cloud.size; ++i) {
    const double* row = s_cloud.row(s_order[i]);
    moved[0][i] = row[0];
    moved[1][i] = row[1];
    moved[2][i] = row[2];
  }

  const std::vector<double> offsets = offset_grid(opt.offset_steps);
  std::vector<Candidate> candidates;
  candidates.reserve(20u * 2u * 6u * offsets.size());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int l = j + 1; l < 6; ++l)
        for (double sign : {1.0, -1.0})
          for (int k = 0; k < 6; ++k)
            for (double off : offsets)
              candidates.push_back(Candidate{{i, j, l}, 3, sign, k, off});

  return run_sweep(fixed, moved, candidates);
}

EsBounds analytic_es_bounds() {
  const double c1 = std::cos(1.0);
  const double s1 = std::sin(1.0);
  EsBounds b;
  b.lower = (1.0 - c1) / 2.0;
  b.upper = ((1.0 - s1) * (1.0 - s1) + (1.0 - c1) * (1.0 - c1)) / (2.0 - 2.0 * c1);
  return b;
}

double GhTable::pair_dist(SpaceKind a, SpaceKind b) const {
  if (a == b) return 0.0;
  const bool has_e = a == SpaceKind::Euclidean || b == SpaceKind::Euclidean;
  const bool has_h = a == SpaceKind::Hyperboloid || b == SpaceKind::Hyperboloid;
  const bool has_s = a == SpaceKind::Hypersphere || b == SpaceKind::Hypersphere;
  if (has_e && has_s) return e_s;
  if (has_e && has_h) return e_h;
  if (has_s && has_h) return s_h;
  throw std::logic_error("GhTable::pair_dist: unknown pair");
}

void GhTable::validate() const {
  for (double v : {e_s, e_h, s_h})
    if (!(v > 0.0) || v > 1.0)
      throw std::runtime_error("GhTable: pair distance outside (0, 1]");
  if (cross_dimension != 1.0)
    throw std::runtime_error("GhTable: cross-dimension bound must be 1");
}

GhTable build_gh_table(GhTableMode mode, const BlanusaEmbedding* emb,
                       const GhEstimateOptions& opt) {
  GhTable table;
  if (mode == GhTableMode::paper_preset) {
    table.e_s = 0.23;
    table.e_h = 0.77;
    table.s_h = 0.84;
    table.prov_e_s = table.prov_e_h = table.prov_s_h = GhProvenance::paper_preset;
  } else {
    if (emb == nullptr || !emb->ready())
      throw std::invalid_argument("build_gh_table: recompute mode needs constants");
    table.e_s = analytic_es_bounds().lower;
    table.prov_e_s = GhProvenance::analytic;
    table.e_h = estimate_gh_eh(*emb, opt);
    table.prov_e_h = GhProvenance::estimated;
    table.s_h = estimate_gh_sh(*emb, opt);
    table.prov_s_h = GhProvenance::estimated;
  }
  table.cross_dimension = 1.0;
  table.validate();
  return table;
}

namespace {

const char* provenance_name(GhProvenance p) {
  switch (p) {
    case GhProvenance::analytic: return "analytic";
    case GhProvenance::estimated: return "estimated";
    case GhProvenance::paper_preset: return "paper_preset";
  }
  return "?";
}

GhProvenance provenance_from(const std::string& s) {
  if (s == "analytic") return GhProvenance::analytic;
  if (s == "estimated") return GhProvenance::estimated;
  if (s == "paper_preset") return GhProvenance::paper_preset;
  throw std::runtime_error("GhTable: unknown provenance \"" + s + "\"");
}

}  // namespace

std::string gh_table_to_json(const GhTable& table) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["pairs"] = {{"E-S", table.e_s}, {"E-H", table.e_h}, {"S-H", table.s_h}};
  j["cross_dimension"] = table.cross_dimension;
  j["provenance"] = {{"E-S", provenance_name(table.prov_e_s)},
                     {"E-H", provenance_name(table.prov_e_h)},
                     {"S-H", provenance_name(table.prov_s_h)}};
  return j.dump(2) + "\n";
}

GhTable gh_table_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GhTable table;
  table.e_s = j.at("pairs").at("E-S").get<double>();
  table.e_h = j.at("pairs").at("E-H").get<double>();
  table.s_h = j.at("pairs").at("S-H").get<double>();
  table.cross_dimension = j.at("cross_dimension").get<double>();
  if (j.contains("provenance")) {
    table.prov_e_s = provenance_from(j["provenance"].at("E-S").get<std::string>());
    table.prov_e_h = provenance_from(j["provenance"].at("E-H").get<std::string>());
    table.prov_s_h = provenance_from(j["provenance"].at("S-H").get<std::string>());
  }
  table.validate();
  return table;
}

}  // namespace nlgs
