// Search loops over a signature graph: graph-kernel Bayesian optimization
// with expected improvement, plus the random baseline. A run is a sequential
// decision process; identical inputs (method, seed, graph, objective) give
// bit-identical traces.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nlgs/gp.hpp"
#include "nlgs/search_space.hpp"

namespace nlgs {

enum class SearchMethod { gh_bo, naive_bo, unweighted_bo, random_search };

std::string method_name(SearchMethod m);
SearchMethod method_from(const std::string& name);

// Graph variant a method runs on (random_search accepts any).
GraphVariant required_variant(SearchMethod m);

struct SearchOptions {
  int budget = 30;
  int n_init = 3;  // seeded-uniform initial queries for the BO methods
  std::uint64_t seed = 0;
  std::vector<double> beta_grid;  // empty = default grid
  double noise_variance = 1e-6;
  bool stop_at_zero = false;  // stop once an exactly-zero objective is seen
};

struct TraceRow {
  int iteration;  // consecutive from 0
  std::size_t node;
  std::string signature;
  double objective;
  double best;  // best-so-far, non-increasing
};

struct RunTrace {
  SearchMethod method = SearchMethod::random_search;
  std::uint64_t seed = 0;
  std::vector<TraceRow> rows;
};

using Objective = std::function<double(std::size_t)>;

// Runs one search. BO methods query n_init distinct seeded-uniform nodes,
// then repeatedly refit the kernel, score unobserved nodes by expected
// improvement and take the argmax (uniform tie-break within 1e-12).
// Requires n_init >= 1 and n_init <= budget <= node count, and a graph of
// the method's variant.
RunTrace run_search(const GraphSpace& g, const Objective& objective, SearchMethod method,
                    const SearchOptions& opt);

// Trace CSV: header plus one row per query. Signature fields are quoted
// since they contain commas.
std::string traces_to_csv(const std::vector<RunTrace>& traces);

// 1-based query count until best-so-far first reaches `optimum` (within
// 1e-12), or budget+1 when the run never gets there.
int queries_to_optimum(const RunTrace& trace, double optimum, int budget);

}  // namespace nlgs
