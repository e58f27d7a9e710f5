#include "nlgs/search_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace nlgs {

namespace {

std::array<int, 3> kind_counts(const Signature& sig) {
  std::array<int, 3> c{0, 0, 0};
  for (const ModelSpace& f : sig.factors) {
    switch (f.kind) {
      case SpaceKind::Euclidean: ++c[0]; break;
      case SpaceKind::Hyperboloid: ++c[1]; break;
      case SpaceKind::Hypersphere: ++c[2]; break;
    }
  }
  return c;
}

constexpr SpaceKind kKinds[3] = {SpaceKind::Euclidean, SpaceKind::Hyperboloid,
                                 SpaceKind::Hypersphere};

// Substitution: equal sizes, exactly one factor exchanged. Insertion: sizes
// one apart, smaller contained in larger. Returns the edge weight, or
// nullopt when the nodes are not adjacent.
std::optional<double> edge_weight(const std::array<int, 3>& a, const std::array<int, 3>& b,
                                  const GhTable& table, WeightMode mode) {
  const int size_a = a[0] + a[1] + a[2];
  const int size_b = b[0] + b[1] + b[2];

  if (size_a == size_b) {
    int plus = -1, minus = -1, abs_sum = 0;
    for (int k = 0; k < 3; ++k) {
      const int d = a[k] - b[k];
      abs_sum += std::abs(d);
      if (d == 1) plus = k;
      if (d == -1) minus = k;
    }
    if (abs_sum != 2 || plus < 0 || minus < 0) return std::nullopt;
    if (mode == WeightMode::rounded) {
      const int lo = std::min(plus, minus), hi = std::max(plus, minus);
      if (lo == 0 && hi == 2) return 4.35;  // E-S
      if (lo == 0 && hi == 1) return 1.30;  // E-H
      return 1.20;                          // S-H
    }
    return 1.0 / table.pair_dist(kKinds[plus], kKinds[minus]);
  }

  if (std::abs(size_a - size_b) == 1) {
    const std::array<int, 3>& small = size_a < size_b ? a : b;
    const std::array<int, 3>& large = size_a < size_b ? b : a;
    for (int k = 0; k < 3; ++k)
      if (small[k] > large[k]) return std::nullopt;
    return 1.0 / table.cross_dimension;
  }
  return std::nullopt;
}

bool node_order(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return signature_to_string(a) < signature_to_string(b);
}

const char* variant_name(GraphVariant v) {
  switch (v) {
    case GraphVariant::gh_weighted: return "gh_weighted";
    case GraphVariant::unweighted_pruned: return "unweighted_pruned";
    case GraphVariant::complete_unweighted: return "complete_unweighted";
  }
  return "?";
}

GraphVariant variant_from(const std::string& s) {
  if (s == "gh_weighted") return GraphVariant::gh_weighted;
  if (s == "unweighted_pruned") return GraphVariant::unweighted_pruned;
  if (s == "complete_unweighted") return GraphVariant::complete_unweighted;
  throw std::runtime_error("graph: unknown variant \"" + s + "\"");
}

}  // namespace

std::vector<Signature> enumerate_signatures(int max_factors, std::optional<int> fixed_size) {
  if (max_factors < 1) throw std::invalid_argument("enumerate_signatures: max_factors >= 1");
  if (fixed_size && *fixed_size < 1)
    throw std::invalid_argument("enumerate_signatures: fixed_size >= 1");

  const int lo = fixed_size ? *fixed_size : 1;
  const int hi = fixed_size ? *fixed_size : max_factors;
  std::vector<Signature> out;
  for (int k = lo; k <= hi; ++k) {
    for (int ne = k; ne >= 0; --ne) {
      for (int nh = k - ne; nh >= 0; --nh) {
        const int ns = k - ne - nh;
        Signature sig;
        sig.factors.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < ne; ++i) sig.factors.push_back(ModelSpace::euclidean());
        for (int i = 0; i < nh; ++i) sig.factors.push_back(ModelSpace::hyperboloid());
        for (int i = 0; i < ns; ++i) sig.factors.push_back(ModelSpace::hypersphere());
        sig.canonical = true;
        out.push_back(std::move(sig));
      }
    }
  }
  return out;
}

GraphSpace build_graph(std::vector<Signature> nodes, const GhTable& table,
                       GraphVariant variant, WeightMode weight_mode) {
  for (Signature& s : nodes)
    if (!s.canonical) s = canonicalize(s);
  std::sort(nodes.begin(), nodes.end(), node_order);

  GraphSpace g;
  g.variant = variant;
  g.weight_mode = weight_mode;
  g.table = table;
  g.nodes = std::move(nodes);
  g.node_names.reserve(g.nodes.size());
  for (const Signature& s : g.nodes) g.node_names.push_back(signature_to_string(s));
  for (std::size_t i = 1; i < g.node_names.size(); ++i)
    if (g.node_names[i] == g.node_names[i - 1])
      throw std::invalid_argument("build_graph: duplicate node " + g.node_names[i]);

  const std::size_t n = g.nodes.size();
  g.adjacency = Matrix(n, n);

  if (variant == GraphVariant::complete_unweighted) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) g.adjacency(i, j) = 1.0;
    return g;
  }

  std::vector<std::array<int, 3>> counts;
  counts.reserve(n);
  for (const Signature& s : g.nodes) counts.push_back(kind_counts(s));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto w = edge_weight(counts[i], counts[j], table, weight_mode);
      if (!w) continue;
      const double value = variant == GraphVariant::unweighted_pruned ? 1.0 : *w;
      g.adjacency(i, j) = value;
      g.adjacency(j, i) = value;
    }
  }
  return g;
}

GraphSpace derive_variant(const GraphSpace& g, GraphVariant variant) {
  if (variant == g.variant) return g;
  const GhTable table = g.table ? *g.table : build_gh_table(GhTableMode::paper_preset);
  if (variant == GraphVariant::gh_weighted && !g.table)
    throw std::invalid_argument("derive_variant: no Gromov-Hausdorff table available");
  return build_graph(g.nodes, table, variant, g.weight_mode);
}

Matrix laplacian(const GraphSpace& g) {
  const std::size_t n = g.size();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < n; ++j) degree += g.adjacency(i, j);
    for (std::size_t j = 0; j < n; ++j) l(i, j) = -g.adjacency(i, j);
    l(i, i) = degree;
  }
  return l;
}

const Eigensystem& GraphSpace::eigensystem() const {
  std::call_once(eig_cache_->flag, [this] { eig_cache_->es = eig_sym(laplacian(*this)); });
  return eig_cache_->es;
}

std::vector<double> distinct_edge_weights(const GraphSpace& g) {
  std::vector<double> weights;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacency(i, j) > 0.0) weights.push_back(g.adjacency(i, j));
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  return weights;
}

bool is_connected(const GraphSpace& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && g.adjacency(i, j) > 0.0) {
        seen[j] = 1;
        ++visited;
        stack.push_back(j);
      }
    }
  }
  return visited == n;
}

std::optional<std::size_t> find_node(const GraphSpace& g, const Signature& sig) {
  const std::string name = signature_to_string(sig);
  for (std::size_t i = 0; i < g.node_names.size(); ++i)
    if (g.node_names[i] == name) return i;
  return std::nullopt;
}

std::string graph_to_json(const GraphSpace& g) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["variant"] = variant_name(g.variant);
  j["nodes"] = g.node_names;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = i + 1; k < g.size(); ++k)
      if (g.adjacency(i, k) > 0.0)
        edges.push_back({i, k, g.adjacency(i, k)});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

GraphSpace graph_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GraphSpace g;
  g.variant = variant_from(j.at("variant").get<std::string>());

  for (const auto& name : j.at("nodes")) {
    g.nodes.push_back(parse_signature(name.get<std::string>()));
    g.node_names.push_back(signature_to_string(g.nodes.back()));
    if (g.node_names.back() != name.get<std::string>())
      throw std::runtime_error("graph: node \"" + name.get<std::string>() +
                               "\" is not in canonical form");
  }
  const std::size_t n = g.nodes.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!node_order(g.nodes[i - 1], g.nodes[i]))
      throw std::runtime_error("graph: nodes out of canonical order");

  g.adjacency = Matrix(n, n);
  for (const auto& e : j.at("edges")) {
    const std::size_t a = e.at(0).get<std::size_t>();
    const std::size_t b = e.at(1).get<std::size_t>();
    const double w = e.at(2).get<double>();
    if (a >= n || b >= n || a >= b) throw std::runtime_error("graph: bad edge endpoints");
    if (!(w > 0.0)) throw std::runtime_error("graph: non-positive edge weight");
    if (g.adjacency(a, b) != 0.0) throw std::runtime_error("graph: duplicate edge");
    g.adjacency(a, b) = w;
    g.adjacency(b, a) = w;
  }

  // Connectivity rules: pruned variants may only join one-substitution or
  // one-insertion pairs, and must include all of them; the complete variant
  // joins everything.
  std::vector<std::array<int, 3>> counts;
  counts.reserve(n);
  for (const Signature& s : g.nodes) counts.push_back(kind_counts(s));
  const GhTable probe = build_gh_table(GhTableMode::paper_preset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const bool present = g.adjacency(i, k) > 0.0;
      if (g.variant == GraphVariant::complete_unweighted) {
        if (!present) throw std::runtime_error("graph: complete variant missing an edge");
        continue;
      }
      const bool allowed = edge_weight(counts[i], counts[k], probe, WeightMode::exact)
                               .has_value();
      if (present && !allowed)
        throw std::runtime_error("graph: edge " + g.node_names[i] + " -- " +
                                 g.node_names[k] + " violates the adjacency rule");
      if (!present && allowed)
        throw std::runtime_error("graph: missing edge " + g.node_names[i] + " -- " +
                                 g.node_names[k]);
    }
  }
  return g;
}

}  // namespace nlgs
