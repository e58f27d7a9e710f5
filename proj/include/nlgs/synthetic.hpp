// Synthetic node objective: one seeded latent tangent vector is projected
// onto every candidate signature, decoded by a frozen random MLP, and scored
// by mean squared error against the ground-truth signature's output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nlgs/product.hpp"

namespace nlgs {

// Fixed-weight MLP with layer widths [input_dim, 100, 100, 100, 5] and ELU
// after every layer, the last included. Weights and biases are uniform on
// (-1/sqrt(fan_in), +1/sqrt(fan_in)) drawn from the seeded stream, so equal
// seeds give bit-identical outputs.
class FrozenMlp {
 public:
  FrozenMlp(int input_dim, std::uint64_t seed);

  Vec forward(const Vec& x) const;
  int input_dim() const { return input_dim_; }

 private:
  struct Layer {
    int in = 0;
    int out = 0;
    std::vector<double> w;  // row-major out x in
    std::vector<double> b;
  };
  int input_dim_;
  std::vector<Layer> layers_;
};

double elu(double z);

struct ObjectiveTable {
  std::string truth;
  std::uint64_t seed = 0;
  bool padded = true;
  std::string latent_digest;
  // Values in node enumeration order; the entry at the truth is exactly 0.
  std::vector<std::pair<std::string, double>> values;
  // Non-truth signatures whose value landed within 1e-12 of zero.
  std::vector<std::string> near_zero;

  std::optional<double> find(const std::string& signature) const;
  double value_of(const std::string& signature) const;  // throws when missing

 private:
  mutable std::unordered_map<std::string, double> index_;
  void build_index() const;
};

// Builds the table. Every candidate must have the truth's factor count and
// the truth must be among the candidates.
ObjectiveTable generate_objective(const Signature& truth,
                                  const std::vector<Signature>& candidates,
                                  std::uint64_t seed);

std::string objective_to_json(const ObjectiveTable& table);
ObjectiveTable objective_from_json(const std::string& text);

}  // namespace nlgs
