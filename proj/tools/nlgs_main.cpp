// Command-line front end: Gromov-Hausdorff estimation, search-space
// construction, synthetic benchmark generation, search runs and numeric
// diagnostics. Exit codes: 0 success, 1 numerical/runtime failure, 2 usage
// or validation error.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlgs/blanusa.hpp"
#include "nlgs/bo.hpp"
#include "nlgs/gh.hpp"
#include "nlgs/gp.hpp"
#include "nlgs/linalg.hpp"
#include "nlgs/rng.hpp"
#include "nlgs/search_space.hpp"
#include "nlgs/synthetic.hpp"

namespace {

using nlgs::GraphSpace;
using nlgs::Signature;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

// JSON configuration files: top-level object of long option names, with an
// optional schema_version field. Command-line flags override file values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::FileError("config must be a JSON object");
    std::vector<CLI::ConfigItem> out;
    for (const auto& [key, value] : j.items()) {
      if (key == "schema_version") {
        if (!value.is_number_integer() || value.get<int>() != 1)
          throw CLI::FileError("config schema_version must be 1");
        continue;
      }
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& e : value)
          item.inputs.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      } else {
        item.inputs.push_back(value.is_string() ? value.get<std::string>() : value.dump());
      }
      out.push_back(std::move(item));
    }
    return out;
  }
};

void attach_config(CLI::App* cmd) {
  cmd->set_config("--config", "", "JSON configuration file; flags override it");
  cmd->config_formatter(std::make_shared<JsonConfig>());
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots != std::string::npos) {
      const std::uint64_t lo = std::stoull(part.substr(0, dots));
      const std::uint64_t hi = std::stoull(part.substr(dots + 2));
      if (hi < lo) throw UsageError("bad seed range " + part);
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else if (!part.empty()) {
      seeds.push_back(std::stoull(part));
    }
  }
  if (seeds.empty()) throw UsageError("no seeds given");
  return seeds;
}

std::vector<nlgs::SearchMethod> parse_methods(const std::string& text) {
  std::vector<nlgs::SearchMethod> methods;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      methods.push_back(nlgs::method_from(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (methods.empty()) throw UsageError("no methods given");
  return methods;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------
// gh

struct GhArgs {
  int quadrature_res = 10000;
  double grid_step = 1e-5;
  std::string pair;
  int res_r = -1;  // -1 = per-pair default
  int res_t = -1;
  int h_res_r = 200;
  int h_res_t = 200;
  int offset_steps = 100;
  std::string mode = "paper";
  std::string out;
};

void run_gh_constants(const GhArgs& args) {
  const nlgs::BlanusaEmbedding emb =
      nlgs::compute_constants(args.quadrature_res, args.grid_step);
  std::cout << "A = " << format_g(emb.a) << "\n";
  std::cout << "G1 = " << format_g(emb.g1) << "\n";
  std::cout << "G2 = " << format_g(emb.g2) << "\n";
  std::cout << "c = " << format_g(emb.c) << "\n";
  std::cout << "eps = " << format_g(emb.eps) << "\n";
}

void run_gh_analytic_es() {
  const nlgs::EsBounds b = nlgs::analytic_es_bounds();
  std::cout << "lower = " << format_g(b.lower) << "\n";
  std::cout << "upper = " << format_g(b.upper) << "\n";
}

nlgs::GhEstimateOptions estimate_options(const GhArgs& args, bool spherical) {
  nlgs::GhEstimateOptions opt;
  opt.res_r = args.res_r > 0 ? args.res_r : (spherical ? 100 : 200);
  opt.res_t = args.res_t > 0 ? args.res_t : (spherical ? 100 : 200);
  opt.h_res_r = args.h_res_r;
  opt.h_res_t = args.h_res_t;
  opt.offset_steps = args.offset_steps;
  return opt;
}

void run_gh_estimate(const GhArgs& args) {
  if (args.pair != "e-h" && args.pair != "s-h")
    throw UsageError("--pair must be e-h or s-h");
  const bool spherical = args.pair == "s-h";
  const nlgs::BlanusaEmbedding emb =
      nlgs::compute_constants(args.quadrature_res, args.grid_step);
  const nlgs::GhEstimateOptions opt = estimate_options(args, spherical);
  const double value =
      spherical ? nlgs::estimate_gh_sh(emb, opt) : nlgs::estimate_gh_eh(emb, opt);
  std::cout << "pair=" << args.pair << " estimate=" << format_g(value) << "\n";
  if (!args.out.empty()) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["pair"] = args.pair;
    j["estimate"] = value;
    j["res_r"] = opt.res_r;
    j["res_t"] = opt.res_t;
    j["h_res_r"] = opt.h_res_r;
    j["h_res_t"] = opt.h_res_t;
    j["offset_steps"] = opt.offset_steps;
    write_file(args.out, j.dump(2) + "\n");
  }
}

void run_gh_table(const GhArgs& args) {
  nlgs::GhTable table;
  if (args.mode == "paper") {
    table = nlgs::build_gh_table(nlgs::GhTableMode::paper_preset);
  } else if (args.mode == "recompute") {
    const nlgs::BlanusaEmbedding emb =
        nlgs::compute_constants(args.quadrature_res, args.grid_step);
    table = nlgs::build_gh_table(nlgs::GhTableMode::recompute, &emb,
                                 estimate_options(args, false));
  } else {
    throw UsageError("--mode must be paper or recompute");
  }
  const std::string json = nlgs::gh_table_to_json(table);
  if (args.out.empty())
    std::cout << json;
  else
    write_file(args.out, json);
}

// ---------------------------------------------------------------------------
// space

struct SpaceArgs {
  int max_factors = 0;
  int fixed_size = 0;
  std::string variant = "gh";
  std::string weights = "exact";
  std::string gh_table_path;
  std::string graph_path;
  std::string out;
};

nlgs::GraphVariant parse_variant(const std::string& name) {
  if (name == "gh") return nlgs::GraphVariant::gh_weighted;
  if (name == "unweighted") return nlgs::GraphVariant::unweighted_pruned;
  if (name == "complete") return nlgs::GraphVariant::complete_unweighted;
  throw UsageError("--variant must be gh, unweighted or complete");
}

void run_space_build(const SpaceArgs& args) {
  if (args.max_factors <= 0 && args.fixed_size <= 0)
    throw UsageError("need --max-factors or --fixed-size");
  const nlgs::GraphVariant variant = parse_variant(args.variant);
  nlgs::WeightMode mode;
  if (args.weights == "exact")
    mode = nlgs::WeightMode::exact;
  else if (args.weights == "rounded")
    mode = nlgs::WeightMode::rounded;
  else
    throw UsageError("--weights must be exact or rounded");

  nlgs::GhTable table;
  if (variant == nlgs::GraphVariant::gh_weighted) {
    if (args.gh_table_path.empty())
      throw UsageError("the gh variant needs --gh-table (see `nlgs gh table`)");
    table = nlgs::gh_table_from_json(read_file(args.gh_table_path));
  } else {
    table = nlgs::build_gh_table(nlgs::GhTableMode::paper_preset);
  }

  std::vector<Signature> nodes =
      args.fixed_size > 0
          ? nlgs::enumerate_signatures(args.fixed_size, args.fixed_size)
          : nlgs::enumerate_signatures(args.max_factors);
  const GraphSpace g = nlgs::build_graph(std::move(nodes), table, variant, mode);

  std::size_t edges = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacency(i, j) > 0.0) ++edges;
  std::cout << "nodes=" << g.size() << " edges=" << edges << "\n";
  if (!args.out.empty()) write_file(args.out, nlgs::graph_to_json(g));
}

void run_space_stats(const SpaceArgs& args) {
  if (args.graph_path.empty()) throw UsageError("need --graph");
  const GraphSpace g = nlgs::graph_from_json(read_file(args.graph_path));
  std::size_t edges = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacency(i, j) > 0.0) ++edges;
  std::cout << "nodes=" << g.size() << " edges=" << edges << "\n";
  std::cout << "connected=" << (nlgs::is_connected(g) ? "yes" : "no") << "\n";
  const std::vector<double> weights = nlgs::distinct_edge_weights(g);
  std::cout << "distinct_weights=" << weights.size() << " [";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << format_g(weights[i]);
  }
  std::cout << "]\n";
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  int factors = 0;
  std::string truth;
  std::uint64_t seed = 0;
  std::string out;
};

void run_bench_synth(const BenchArgs& args) {
  if (args.factors <= 0) throw UsageError("need --factors");
  if (args.truth.empty()) throw UsageError("need --truth");
  Signature truth;
  try {
    truth = nlgs::parse_signature(args.truth);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (truth.size() != static_cast<std::size_t>(args.factors))
    throw UsageError("--truth has " + std::to_string(truth.size()) +
                     " factors, expected " + std::to_string(args.factors));

  const std::vector<Signature> slice =
      nlgs::enumerate_signatures(args.factors, args.factors);
  const nlgs::ObjectiveTable table = nlgs::generate_objective(truth, slice, args.seed);
  for (const std::string& name : table.near_zero)
    std::cerr << "warning: non-truth node " << name << " is within 1e-12 of zero\n";
  const std::string json = nlgs::objective_to_json(table);
  if (args.out.empty())
    std::cout << json;
  else
    write_file(args.out, json);
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string graph_path;
  std::string objective_path;
  std::string methods = "gh-bo,naive-bo,unweighted-bo,random";
  int budget = 30;
  std::string seeds = "0";
  int n_init = 3;
  double beta_min = 1e-2;
  double beta_max = 1e2;
  int beta_count = 25;
  double noise = 1e-6;
  bool stop_at_zero = false;
  std::string out;
};

void run_search_cmd(const SearchArgs& args) {
  if (args.graph_path.empty()) throw UsageError("need --graph");
  if (args.objective_path.empty()) throw UsageError("need --objective");
  if (args.out.empty()) throw UsageError("need --out");
  const GraphSpace loaded = nlgs::graph_from_json(read_file(args.graph_path));
  const nlgs::ObjectiveTable table =
      nlgs::objective_from_json(read_file(args.objective_path));

  std::vector<std::string> missing;
  for (const std::string& name : loaded.node_names)
    if (!table.find(name)) missing.push_back(name);
  if (!missing.empty()) {
    std::string msg = "objective is missing " + std::to_string(missing.size()) +
                      " graph node(s):";
    for (const std::string& name : missing) msg += " " + name;
    throw UsageError(msg);
  }

  const std::vector<nlgs::SearchMethod> methods = parse_methods(args.methods);
  const std::vector<std::uint64_t> seeds = parse_seeds(args.seeds);
  if (args.beta_count < 1 || args.beta_min <= 0.0 || args.beta_max < args.beta_min)
    throw UsageError("bad beta grid");

  nlgs::SearchOptions opt;
  opt.budget = args.budget;
  opt.n_init = args.n_init;
  opt.noise_variance = args.noise;
  opt.stop_at_zero = args.stop_at_zero;
  opt.beta_grid.resize(static_cast<std::size_t>(args.beta_count));
  for (int i = 0; i < args.beta_count; ++i) {
    const double f = args.beta_count == 1
                         ? 0.0
                         : static_cast<double>(i) / (args.beta_count - 1);
    opt.beta_grid[static_cast<std::size_t>(i)] =
        args.beta_min * std::pow(args.beta_max / args.beta_min, f);
  }

  double optimum = std::numeric_limits<double>::infinity();
  for (const std::string& name : loaded.node_names)
    optimum = std::min(optimum, table.value_of(name));

  // Each method runs on its own graph variant over the same node set.
  std::map<nlgs::GraphVariant, GraphSpace> variants;
  const auto graph_for = [&](nlgs::SearchMethod m) -> const GraphSpace& {
    const nlgs::GraphVariant v = nlgs::required_variant(m);
    auto it = variants.find(v);
    if (it == variants.end()) {
      if (v == loaded.variant) it = variants.emplace(v, loaded).first;
      else it = variants.emplace(v, nlgs::derive_variant(loaded, v)).first;
    }
    return it->second;
  };

  std::vector<nlgs::RunTrace> traces;
  for (const nlgs::SearchMethod method : methods) {
    const GraphSpace& g = graph_for(method);
    const nlgs::Objective objective = [&](std::size_t node) {
      return table.value_of(g.node_names[node]);
    };
    std::vector<double> iters;
    std::vector<double> finals;
    for (const std::uint64_t seed : seeds) {
      nlgs::SearchOptions run_opt = opt;
      run_opt.seed = seed;
      traces.push_back(nlgs::run_search(g, objective, method, run_opt));
      iters.push_back(nlgs::queries_to_optimum(traces.back(), optimum, opt.budget));
      finals.push_back(traces.back().rows.back().best);
    }
    double mean_final = 0.0;
    for (double f : finals) mean_final += f;
    mean_final /= static_cast<double>(finals.size());
    std::cout << "method=" << nlgs::method_name(method)
              << " median_iterations_to_optimum=" << format_g(median(iters))
              << " mean_final_best=" << format_g(mean_final) << "\n";
  }
  write_file(args.out, nlgs::traces_to_csv(traces));
}

// ---------------------------------------------------------------------------
// diag

struct DiagArgs {
  int samples = 200;
  int size = 50;
  std::uint64_t seed = 7;
  int quadrature_res = 10000;
  double grid_step = 1e-5;
};

void run_diag_embed(const DiagArgs& args) {
  const nlgs::BlanusaEmbedding emb =
      nlgs::compute_constants(args.quadrature_res, args.grid_step);
  nlgs::SplitMix64 rng(args.seed);
  const double h = 1e-5;

  double worst_rel = 0.0;
  int pd_failures = 0;
  for (int s = 0; s < args.samples; ++s) {
    // Uniform over the unit disk of the chart.
    double px, py;
    do {
      px = 2.0 * rng.next_double() - 1.0;
      py = 2.0 * rng.next_double() - 1.0;
    } while (px * px + py * py > 1.0);

    double j[6][2];
    for (int c = 0; c < 2; ++c) {
      std::array<double, 2> hi{px, py};
      std::array<double, 2> lo{px, py};
      hi[static_cast<std::size_t>(c)] += h;
      lo[static_cast<std::size_t>(c)] -= h;
      const std::array<double, 6> f_hi = nlgs::blanusa_map(emb, hi);
      const std::array<double, 6> f_lo = nlgs::blanusa_map(emb, lo);
      for (int r = 0; r < 6; ++r)
        j[r][c] = (f_hi[static_cast<std::size_t>(r)] - f_lo[static_cast<std::size_t>(r)]) /
                  (2.0 * h);
    }
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;
    for (int r = 0; r < 6; ++r) {
      g00 += j[r][0] * j[r][0];
      g01 += j[r][0] * j[r][1];
      g11 += j[r][1] * j[r][1];
    }
    const bool pd = g00 > 0.0 && g00 * g11 - g01 * g01 > 0.0;
    if (!pd) ++pd_failures;
    const double t11 = std::exp(2.0 * px);
    const double num = std::sqrt((g00 - 1.0) * (g00 - 1.0) + 2.0 * g01 * g01 +
                                 (g11 - t11) * (g11 - t11));
    const double den = std::sqrt(1.0 + t11 * t11);
    worst_rel = std::max(worst_rel, num / den);
  }

  std::cout << "samples=" << args.samples << "\n";
  std::cout << "pullback_positive_definite=" << (pd_failures == 0 ? "yes" : "no") << "\n";
  // The deviation from the chart metric is reported, not asserted: the
  // first embedding coordinate uses the constant flattening factor, which
  // trades pointwise isometry for a global Lipschitz bound.
  std::cout << "max_relative_metric_deviation=" << format_g(worst_rel) << "\n";
  if (pd_failures > 0)
    throw std::runtime_error("pullback metric not positive definite at " +
                             std::to_string(pd_failures) + " sample(s)");
}

void run_diag_eig(const DiagArgs& args) {
  if (args.size < 2) throw UsageError("--size must be >= 2");
  nlgs::SplitMix64 rng(args.seed);
  const std::size_t n = static_cast<std::size_t>(args.size);
  nlgs::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = 2.0 * rng.next_double() - 1.0;
      m(i, j) = v;
      m(j, i) = v;
    }
  const nlgs::Eigensystem es = nlgs::eig_sym(m);
  double residual = 0.0;
  double ortho = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double rec = 0.0;
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        rec += es.u(i, k) * es.lambda[k] * es.u(j, k);
        dot += es.u(k, i) * es.u(k, j);
      }
      residual = std::max(residual, std::abs(rec - m(i, j)));
      ortho = std::max(ortho, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  std::cout << "size=" << args.size << "\n";
  std::cout << "reconstruction_residual=" << format_g(residual) << "\n";
  std::cout << "orthonormality_error=" << format_g(ortho) << "\n";
  if (residual > 1e-7)
    throw std::runtime_error("eigensolver residual exceeds 1e-7");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neural latent geometry search toolkit"};
  app.require_subcommand(1);

  GhArgs gh_args;
  SpaceArgs space_args;
  BenchArgs bench_args;
  SearchArgs search_args;
  DiagArgs diag_args;

  // gh
  CLI::App* gh = app.add_subcommand("gh", "Gromov-Hausdorff distances between unit balls");
  gh->require_subcommand(1);

  CLI::App* gh_constants =
      gh->add_subcommand("constants", "embedding constants A, G1, G2, c, eps");
  gh_constants->add_option("--quadrature-res", gh_args.quadrature_res,
                           "Simpson intervals for the bump integral (>= 1000)")
      ->capture_default_str();
  gh_constants->add_option("--grid-step", gh_args.grid_step,
                           "derivative grid step over [-2, 2] (<= 1e-4)")
      ->capture_default_str();
  attach_config(gh_constants);
  gh_constants->callback([&] { run_gh_constants(gh_args); });

  CLI::App* gh_es = gh->add_subcommand(
      "analytic-es", "closed-form Euclidean-spherical bounds");
  gh_es->callback([&] { run_gh_analytic_es(); });

  CLI::App* gh_estimate =
      gh->add_subcommand("estimate", "sweep estimate for one pair of spaces");
  gh_estimate->add_option("--pair", gh_args.pair, "e-h or s-h")->required();
  gh_estimate->add_option("--res-r", gh_args.res_r,
                          "radial resolution of the swept cloud (default 200 e-h, 100 s-h)");
  gh_estimate->add_option("--res-t", gh_args.res_t,
                          "angular resolution of the swept cloud (default 200 e-h, 100 s-h)");
  gh_estimate->add_option("--h-res-r", gh_args.h_res_r, "hyperbolic cloud radial resolution")
      ->capture_default_str();
  gh_estimate->add_option("--h-res-t", gh_args.h_res_t, "hyperbolic cloud angular resolution")
      ->capture_default_str();
  gh_estimate->add_option("--offset-steps", gh_args.offset_steps,
                          "offset grid size over [-0.5, 0.5]")
      ->capture_default_str();
  gh_estimate->add_option("--quadrature-res", gh_args.quadrature_res)->capture_default_str();
  gh_estimate->add_option("--grid-step", gh_args.grid_step)->capture_default_str();
  gh_estimate->add_option("--out", gh_args.out, "write the estimate as JSON");
  attach_config(gh_estimate);
  gh_estimate->callback([&] { run_gh_estimate(gh_args); });

  CLI::App* gh_table = gh->add_subcommand("table", "assemble the pairwise distance table");
  gh_table->add_option("--mode", gh_args.mode, "paper or recompute")->capture_default_str();
  gh_table->add_option("--out", gh_args.out, "output path (stdout when absent)");
  gh_table->add_option("--res-r", gh_args.res_r);
  gh_table->add_option("--res-t", gh_args.res_t);
  gh_table->add_option("--h-res-r", gh_args.h_res_r)->capture_default_str();
  gh_table->add_option("--h-res-t", gh_args.h_res_t)->capture_default_str();
  gh_table->add_option("--offset-steps", gh_args.offset_steps)->capture_default_str();
  gh_table->add_option("--quadrature-res", gh_args.quadrature_res)->capture_default_str();
  gh_table->add_option("--grid-step", gh_args.grid_step)->capture_default_str();
  attach_config(gh_table);
  gh_table->callback([&] { run_gh_table(gh_args); });

  // space
  CLI::App* space = app.add_subcommand("space", "signature graph construction");
  space->require_subcommand(1);

  CLI::App* space_build = space->add_subcommand("build", "enumerate nodes and build the graph");
  space_build->add_option("--max-factors", space_args.max_factors,
                          "largest product size to enumerate");
  space_build->add_option("--fixed-size", space_args.fixed_size,
                          "enumerate exactly this product size instead");
  space_build->add_option("--variant", space_args.variant, "gh, unweighted or complete")
      ->capture_default_str();
  space_build->add_option("--weights", space_args.weights, "exact or rounded")
      ->capture_default_str();
  space_build->add_option("--gh-table", space_args.gh_table_path,
                          "distance table JSON (required for the gh variant)");
  space_build->add_option("--out", space_args.out, "graph JSON path");
  attach_config(space_build);
  space_build->callback([&] { run_space_build(space_args); });

  CLI::App* space_stats = space->add_subcommand("stats", "summarize a graph file");
  space_stats->add_option("--graph", space_args.graph_path, "graph JSON path")->required();
  attach_config(space_stats);
  space_stats->callback([&] { run_space_stats(space_args); });

  // bench
  CLI::App* bench = app.add_subcommand("bench", "synthetic benchmark objectives");
  bench->require_subcommand(1);

  CLI::App* bench_synth = bench->add_subcommand(
      "synth", "frozen-network objective over a fixed-size slice");
  bench_synth->add_option("--factors", bench_args.factors, "product size of the slice")
      ->required();
  bench_synth->add_option("--truth", bench_args.truth, "ground-truth signature, e.g. E,H,S")
      ->required();
  bench_synth->add_option("--seed", bench_args.seed, "generator seed")->capture_default_str();
  bench_synth->add_option("--out", bench_args.out, "objective JSON path (stdout when absent)");
  attach_config(bench_synth);
  bench_synth->callback([&] { run_bench_synth(bench_args); });

  // search
  CLI::App* search = app.add_subcommand("search", "run searches over a graph");
  search->require_subcommand(1);

  CLI::App* search_run = search->add_subcommand("run", "run methods x seeds and write traces");
  search_run->add_option("--graph", search_args.graph_path, "graph JSON path")->required();
  search_run->add_option("--objective", search_args.objective_path, "objective JSON path")
      ->required();
  search_run->add_option("--methods", search_args.methods,
                         "comma list of gh-bo, naive-bo, unweighted-bo, random")
      ->capture_default_str();
  search_run->add_option("--budget", search_args.budget, "queries per run")
      ->capture_default_str();
  search_run->add_option("--seeds", search_args.seeds, "comma list and/or a..b ranges")
      ->capture_default_str();
  search_run->add_option("--n-init", search_args.n_init, "initial random queries (BO)")
      ->capture_default_str();
  search_run->add_option("--beta-min", search_args.beta_min)->capture_default_str();
  search_run->add_option("--beta-max", search_args.beta_max)->capture_default_str();
  search_run->add_option("--beta-count", search_args.beta_count)->capture_default_str();
  search_run->add_option("--noise", search_args.noise, "observation jitter")
      ->capture_default_str();
  search_run->add_flag("--stop-at-zero", search_args.stop_at_zero,
                       "stop a run once an exactly-zero objective is found");
  search_run->add_option("--out", search_args.out, "trace CSV path")->required();
  attach_config(search_run);
  search_run->callback([&] { run_search_cmd(search_args); });

  // diag
  CLI::App* diag = app.add_subcommand("diag", "numeric diagnostics");
  diag->require_subcommand(1);

  CLI::App* diag_embed = diag->add_subcommand(
      "embed", "pullback-metric check of the hyperbolic embedding");
  diag_embed->add_option("--samples", diag_args.samples, "sample count")->capture_default_str();
  diag_embed->add_option("--seed", diag_args.seed)->capture_default_str();
  diag_embed->add_option("--quadrature-res", diag_args.quadrature_res)->capture_default_str();
  diag_embed->add_option("--grid-step", diag_args.grid_step)->capture_default_str();
  attach_config(diag_embed);
  diag_embed->callback([&] { run_diag_embed(diag_args); });

  CLI::App* diag_eig = diag->add_subcommand("eig", "eigensolver residual on a random matrix");
  diag_eig->add_option("--size", diag_args.size)->capture_default_str();
  diag_eig->add_option("--seed", diag_args.seed)->capture_default_str();
  attach_config(diag_eig);
  diag_eig->callback([&] { run_diag_eig(diag_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
