// Product-manifold signatures: canonical multisets of model-space factors,
// projection of tangent vectors through the per-factor exponential maps, and
// the product metric.
#pragma once

#include <string>
#include <vector>

#include "nlgs/model_space.hpp"

namespace nlgs {

struct Signature {
  std::vector<ModelSpace> factors;
  bool canonical = false;

  std::size_t size() const { return factors.size(); }
};

// Points of a product manifold, one ambient block per factor.
using ProductPoint = std::vector<Vec>;

// Sorts factors with the total order E < H < S (ties by dimension, then
// curvature). Idempotent; two signatures name the same node iff their
// canonical forms are equal.
Signature canonicalize(const Signature& sig);

bool same_signature(const Signature& a, const Signature& b);

// Canonical text form, factor letters joined by commas: "E,E,H,S".
std::string signature_to_string(const Signature& sig);

// Parses the text form; factors get the default curvatures {0, -1, +1} and
// dimension 2. Throws std::invalid_argument on anything else.
Signature parse_signature(const std::string& text);

// Splits a tangent vector of length 2 * n_factors into consecutive pairs and
// maps pair i through factor i's exponential map at that factor's origin.
ProductPoint project(const Signature& sig, const Vec& tangent);

// sqrt of the sum of squared per-factor geodesic distances.
double product_dist(const Signature& sig, const ProductPoint& a, const ProductPoint& b);

// Concatenates the ambient blocks. With pad_euclidean, every Euclidean block
// gets a trailing zero so all factors contribute exactly three coordinates.
Vec flatten(const Signature& sig, const ProductPoint& p, bool pad_euclidean);

}  // namespace nlgs
