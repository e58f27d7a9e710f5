#include "nlgs/product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace nlgs {

namespace {

int kind_rank(SpaceKind k) {
  switch (k) {
    case SpaceKind::Euclidean: return 0;
    case SpaceKind::Hyperboloid: return 1;
    case SpaceKind::Hypersphere: return 2;
  }
  return 3;
}

char kind_letter(SpaceKind k) {
  switch (k) {
    case SpaceKind::Euclidean: return 'E';
    case SpaceKind::Hyperboloid: return 'H';
    case SpaceKind::Hypersphere: return 'S';
  }
  return '?';
}

}  // namespace

Signature canonicalize(const Signature& sig) {
  Signature out = sig;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const ModelSpace& a, const ModelSpace& b) {
              return std::make_tuple(kind_rank(a.kind), a.dim, a.curvature) <
                     std::make_tuple(kind_rank(b.kind), b.dim, b.curvature);
            });
  out.canonical = true;
  return out;
}

bool same_signature(const Signature& a, const Signature& b) {
  const Signature ca = a.canonical ? a : canonicalize(a);
  const Signature cb = b.canonical ? b : canonicalize(b);
  if (ca.factors.size() != cb.factors.size()) return false;
  for (std::size_t i = 0; i < ca.factors.size(); ++i) {
    if (ca.factors[i].kind != cb.factors[i].kind ||
        ca.factors[i].dim != cb.factors[i].dim ||
        ca.factors[i].curvature != cb.factors[i].curvature)
      return false;
  }
  return true;
}

std::string signature_to_string(const Signature& sig) {
  const Signature c = sig.canonical ? sig : canonicalize(sig);
  std::string out;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (i > 0) out += ',';
    out += kind_letter(c.factors[i].kind);
  }
  return out;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    switch (ch) {
      case 'E': sig.factors.push_back(ModelSpace::euclidean()); break;
      case 'H': sig.factors.push_back(ModelSpace::hyperboloid()); break;
      case 'S': sig.factors.push_back(ModelSpace::hypersphere()); break;
      default:
        throw std::invalid_argument("parse_signature: unknown factor '" +
                                    std::string(1, ch) + "' in \"" + text + "\"");
    }
    ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw std::invalid_argument("parse_signature: expected ',' in \"" + text + "\"");
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("parse_signature: trailing ',' in \"" + text + "\"");
    }
  }
  if (sig.factors.empty())
    throw std::invalid_argument("parse_signature: empty signature");
  return canonicalize(sig);
}

ProductPoint project(const Signature& sig, const Vec& tangent) {
  if (tangent.size() != 2 * sig.factors.size())
    throw std::invalid_argument("project: tangent length must be 2 * factor count");
  ProductPoint out;
  out.reserve(sig.factors.size());
  for (std::size_t i = 0; i < sig.factors.size(); ++i) {
    const ModelSpace& f = sig.factors[i];
    const double a = tangent[2 * i];
    const double b = tangent[2 * i + 1];
    Vec ambient_tangent(static_cast<std::size_t>(f.ambient_dim()), 0.0);
    switch (f.kind) {
      case SpaceKind::Euclidean:
        ambient_tangent[0] = a;
        ambient_tangent[1] = b;
        break;
      case SpaceKind::Hyperboloid:
        // Tangent space at the pole (1,0,0) is spanned by the space-like axes.
        ambient_tangent[1] = a;
        ambient_tangent[2] = b;
        break;
      case SpaceKind::Hypersphere:
        // Tangent space at the pole (0,0,1) is the first two axes.
        ambient_tangent[0] = a;
        ambient_tangent[1] = b;
        break;
    }
    out.push_back(exp_map(f, origin(f), ambient_tangent));
  }
  return out;
}

double product_dist(const Signature& sig, const ProductPoint& a, const ProductPoint& b) {
  if (a.size() != sig.factors.size() || b.size() != sig.factors.size())
    throw std::invalid_argument("product_dist: points do not conform to the signature");
  double sum = 0.0;
  for (std::size_t i = 0; i < sig.factors.size(); ++i) {
    const double d = geodesic_dist(sig.factors[i], a[i], b[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

Vec flatten(const Signature& sig, const ProductPoint& p, bool pad_euclidean) {
  if (p.size() != sig.factors.size())
    throw std::invalid_argument("flatten: point does not conform to the signature");
  Vec out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.insert(out.end(), p[i].begin(), p[i].end());
    if (pad_euclidean && sig.factors[i].kind == SpaceKind::Euclidean)
      out.insert(out.end(), static_cast<std::size_t>(sig.factors[i].dim + 1 - p[i].size()),
                 0.0);
  }
  return out;
}

}  // namespace nlgs
