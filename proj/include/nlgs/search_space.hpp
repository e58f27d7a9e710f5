// The graph of candidate product-manifold signatures. Nodes are canonical
// signatures in size-major lexicographic order; edges join signatures that
// differ by exactly one factor substitution (same size) or one factor
// insertion (sizes one apart), weighted by reciprocal Gromov-Hausdorff
// distances.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nlgs/gh.hpp"
#include "nlgs/linalg.hpp"
#include "nlgs/product.hpp"

namespace nlgs {

enum class GraphVariant { gh_weighted, unweighted_pruned, complete_unweighted };
enum class WeightMode { exact, rounded };

// All multisets over {E, H, S} with sizes 1..max_factors (or exactly
// fixed_size), canonical, size-major lexicographic. Size k contributes
// (k+1)(k+2)/2 signatures.
std::vector<Signature> enumerate_signatures(int max_factors,
                                            std::optional<int> fixed_size = std::nullopt);

struct GraphSpace {
  std::vector<Signature> nodes;
  std::vector<std::string> node_names;
  Matrix adjacency;  // symmetric, zero diagonal
  GraphVariant variant = GraphVariant::gh_weighted;
  WeightMode weight_mode = WeightMode::exact;
  std::optional<GhTable> table;

  std::size_t size() const { return nodes.size(); }

  // Laplacian eigendecomposition, computed once and shared between copies.
  const Eigensystem& eigensystem() const;

 private:
  struct EigCache {
    std::once_flag flag;
    Eigensystem es;
  };
  std::shared_ptr<EigCache> eig_cache_ = std::make_shared<EigCache>();
};

// Builds the graph over the given nodes (sorted into canonical order;
// duplicates rejected). Substitution edges get weight 1/d_GH of the two
// exchanged kinds (or the fixed rounded weights), insertion edges weight 1.
GraphSpace build_graph(std::vector<Signature> nodes, const GhTable& table,
                       GraphVariant variant, WeightMode weight_mode = WeightMode::exact);

// Same node set, different connectivity/weights.
GraphSpace derive_variant(const GraphSpace& g, GraphVariant variant);

// L = D - A.
Matrix laplacian(const GraphSpace& g);

// Sorted distinct positive edge weights.
std::vector<double> distinct_edge_weights(const GraphSpace& g);

bool is_connected(const GraphSpace& g);

// Index of a signature among the graph nodes, if present.
std::optional<std::size_t> find_node(const GraphSpace& g, const Signature& sig);

std::string graph_to_json(const GraphSpace& g);
GraphSpace graph_from_json(const std::string& text);

}  // namespace nlgs
