#include "nlgs/bo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "nlgs/rng.hpp"

namespace nlgs {

std::string method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::gh_bo: return "gh-bo";
    case SearchMethod::naive_bo: return "naive-bo";
    case SearchMethod::unweighted_bo: return "unweighted-bo";
    case SearchMethod::random_search: return "random";
  }
  return "?";
}

SearchMethod method_from(const std::string& name) {
  if (name == "gh-bo") return SearchMethod::gh_bo;
  if (name == "naive-bo") return SearchMethod::naive_bo;
  if (name == "unweighted-bo") return SearchMethod::unweighted_bo;
  if (name == "random") return SearchMethod::random_search;
  throw std::invalid_argument("unknown search method \"" + name + "\"");
}

GraphVariant required_variant(SearchMethod m) {
  switch (m) {
    case SearchMethod::gh_bo: return GraphVariant::gh_weighted;
    case SearchMethod::naive_bo: return GraphVariant::complete_unweighted;
    case SearchMethod::unweighted_bo: return GraphVariant::unweighted_pruned;
    case SearchMethod::random_search: return GraphVariant::gh_weighted;
  }
  return GraphVariant::gh_weighted;
}

namespace {

void record(RunTrace& trace, const GraphSpace& g, const Objective& objective,
            std::size_t node, double& best) {
  const double value = objective(node);
  if (trace.rows.empty() || value < best) best = value;
  trace.rows.push_back(TraceRow{static_cast<int>(trace.rows.size()), node,
                                g.node_names[node], value, best});
}

}  // namespace

RunTrace run_search(const GraphSpace& g, const Objective& objective, SearchMethod method,
                    const SearchOptions& opt) {
  const std::size_t n = g.size();
  if (opt.budget < 1 || static_cast<std::size_t>(opt.budget) > n)
    throw std::invalid_argument("run_search: budget must be in [1, node count]");
  if (opt.n_init < 1 || opt.n_init > opt.budget)
    throw std::invalid_argument("run_search: need 1 <= n_init <= budget");
  if (method != SearchMethod::random_search && g.variant != required_variant(method))
    throw std::invalid_argument("run_search: graph variant does not match method " +
                                method_name(method));

  RunTrace trace;
  trace.method = method;
  trace.seed = opt.seed;
  SplitMix64 rng(opt.seed);
  double best = 0.0;

  if (method == SearchMethod::random_search) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    for (int i = 0; i < opt.budget; ++i) {
      record(trace, g, objective, order[static_cast<std::size_t>(i)], best);
      if (opt.stop_at_zero && trace.rows.back().objective == 0.0) break;
    }
    return trace;
  }

  const Eigensystem& eig = g.eigensystem();
  const std::vector<double> beta_grid =
      opt.beta_grid.empty() ? default_beta_grid() : opt.beta_grid;

  GpState state;
  state.noise_variance = opt.noise_variance;
  std::vector<char> seen(n, 0);

  // Seeded-uniform distinct initial queries.
  {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    for (int i = 0; i < opt.n_init; ++i) {
      const std::size_t node = order[static_cast<std::size_t>(i)];
      record(trace, g, objective, node, best);
      state.observed.push_back(node);
      state.values.push_back(trace.rows.back().objective);
      seen[node] = 1;
      if (opt.stop_at_zero && trace.rows.back().objective == 0.0) return trace;
    }
  }

  while (static_cast<int>(trace.rows.size()) < opt.budget) {
    const DiffusionKernel kernel = fit_hyperparameters(eig, state, beta_grid);

    std::vector<std::size_t> unobserved;
    unobserved.reserve(n - state.observed.size());
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) unobserved.push_back(i);

    const Posterior post = gp_posterior_standardized(kernel, state, unobserved);
    const double f_best_std = (best - state.mean) / state.stddev;
    const std::vector<double> ei = expected_improvement(post.mean, post.std, f_best_std);

    double ei_max = -1.0;
    for (double v : ei) ei_max = std::max(ei_max, v);
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < ei.size(); ++i)
      if (ei[i] >= ei_max - 1e-12) ties.push_back(unobserved[i]);
    const std::size_t pick =
        ties.size() == 1 ? ties[0]
                         : ties[static_cast<std::size_t>(rng.uniform_below(ties.size()))];

    record(trace, g, objective, pick, best);
    state.observed.push_back(pick);
    state.values.push_back(trace.rows.back().objective);
    seen[pick] = 1;
    if (opt.stop_at_zero && trace.rows.back().objective == 0.0) break;
  }
  return trace;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string traces_to_csv(const std::vector<RunTrace>& traces) {
  std::string out = "run_id,method,seed,iteration,node_index,signature,objective,best_so_far\n";
  for (const RunTrace& t : traces) {
    const std::string run_id = method_name(t.method) + "-s" + std::to_string(t.seed);
    for (const TraceRow& row : t.rows) {
      out += run_id;
      out += ',';
      out += method_name(t.method);
      out += ',';
      out += std::to_string(t.seed);
      out += ',';
      out += std::to_string(row.iteration);
      out += ',';
      out += std::to_string(row.node);
      out += ",\"";
      out += row.signature;
      out += "\",";
      out += format_double(row.objective);
      out += ',';
      out += format_double(row.best);
      out += '\n';
    }
  }
  return out;
}

int queries_to_optimum(const RunTrace& trace, double optimum, int budget) {
  for (const TraceRow& row : trace.rows)
    if (row.best <= optimum + 1e-12) return row.iteration + 1;
  return budget + 1;
}

}  // namespace nlgs
