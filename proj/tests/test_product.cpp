#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "nlgs/product.hpp"
#include "nlgs/rng.hpp"

using namespace nlgs;

namespace {

Signature sig_of(const std::string& text) { return parse_signature(text); }

}  // namespace

TEST_CASE("canonicalize sorts factors") {
  Signature s;
  s.factors = {ModelSpace::hypersphere(), ModelSpace::euclidean(), ModelSpace::hyperboloid()};
  CHECK(signature_to_string(canonicalize(s)) == "E,H,S");
  CHECK(signature_to_string(canonicalize(canonicalize(s))) == "E,H,S");

  Signature e;
  e.factors = {ModelSpace::euclidean()};
  CHECK(signature_to_string(canonicalize(e)) == "E");
}

TEST_CASE("canonicalize is permutation invariant") {
  SplitMix64 rng(3);
  Signature s = sig_of("E,E,H,S,S");
  for (int i = 0; i < 50; ++i) {
    Signature shuffled = s;
    rng.shuffle(shuffled.factors);
    shuffled.canonical = false;
    CHECK(same_signature(canonicalize(shuffled), s));
  }
}

TEST_CASE("six distinct canonical signatures of size two") {
  std::set<std::string> seen;
  const char letters[] = {'E', 'H', 'S'};
  for (char a : letters)
    for (char b : letters) {
      Signature s = sig_of(std::string(1, a) + "," + std::string(1, b));
      seen.insert(signature_to_string(s));
    }
  CHECK(seen == std::set<std::string>{"E,E", "E,H", "E,S", "H,H", "H,S", "S,S"});
}

TEST_CASE("signature parsing rejects malformed text") {
  CHECK_THROWS_AS(parse_signature(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("E,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("E,X"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("EH"), std::invalid_argument);
}

TEST_CASE("projection maps tangent pairs through the factor maps") {
  const ProductPoint pe = project(sig_of("E"), {1, 2});
  CHECK(pe[0] == Vec{1, 2});

  const ProductPoint ph = project(sig_of("H"), {0.7, 0});
  CHECK(ph[0][0] == doctest::Approx(std::cosh(0.7)).epsilon(1e-14));
  CHECK(ph[0][1] == doctest::Approx(std::sinh(0.7)).epsilon(1e-14));
  CHECK(ph[0][2] == 0.0);

  const ProductPoint pes = project(sig_of("E,S"), {1, 2, 0.5, 0});
  CHECK(pes[0] == Vec{1, 2});
  CHECK(pes[1][0] == doctest::Approx(std::sin(0.5)).epsilon(1e-14));
  CHECK(pes[1][1] == 0.0);
  CHECK(pes[1][2] == doctest::Approx(std::cos(0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(project(sig_of("E,S"), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("projecting zero gives the tuple of origins") {
  const Signature s = sig_of("E,H,S");
  const ProductPoint p = project(s, Vec(6, 0.0));
  CHECK(p[0] == Vec{0, 0});
  CHECK(p[1] == Vec{1, 0, 0});
  CHECK(p[2] == Vec{0, 0, 1});
}

TEST_CASE("product distance basics") {
  const Signature s = sig_of("E,E");
  const ProductPoint a = project(s, {0, 0, 0, 0});
  const ProductPoint b = project(s, {3, 0, 0, 4});
  CHECK(product_dist(s, a, b) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(product_dist(s, a, a) == 0.0);

  const Signature h = sig_of("H");
  const ProductPoint ha = project(h, {0.3, 0.1});
  const ProductPoint hb = project(h, {-0.2, 0.4});
  CHECK(product_dist(h, ha, hb) ==
        doctest::Approx(geodesic_dist(h.factors[0], ha[0], hb[0])).epsilon(1e-14));
}

TEST_CASE("product distance is a metric on sampled triples") {
  SplitMix64 rng(41);
  const Signature s = sig_of("E,H,S");
  for (int i = 0; i < 1000; ++i) {
    ProductPoint pts[3];
    for (ProductPoint& p : pts) {
      Vec tangent(6);
      for (double& c : tangent) c = 0.8 * (2.0 * rng.next_double() - 1.0);
      p = project(s, tangent);
    }
    const double dab = product_dist(s, pts[0], pts[1]);
    CHECK(dab == product_dist(s, pts[1], pts[0]));
    CHECK(dab <= product_dist(s, pts[0], pts[2]) + product_dist(s, pts[2], pts[1]) + 1e-9);
  }
}

TEST_CASE("all-Euclidean product distance equals flat Euclidean distance") {
  SplitMix64 rng(43);
  const Signature s = sig_of("E,E,E");
  for (int i = 0; i < 100; ++i) {
    Vec ta(6), tb(6);
    for (double& c : ta) c = 2.0 * rng.next_double() - 1.0;
    for (double& c : tb) c = 2.0 * rng.next_double() - 1.0;
    const ProductPoint a = project(s, ta);
    const ProductPoint b = project(s, tb);
    const Vec fa = flatten(s, a, false);
    const Vec fb = flatten(s, b, false);
    double flat = 0.0;
    for (std::size_t j = 0; j < fa.size(); ++j)
      flat += (fa[j] - fb[j]) * (fa[j] - fb[j]);
    CHECK(product_dist(s, a, b) == doctest::Approx(std::sqrt(flat)).epsilon(1e-12));
  }
}

TEST_CASE("flattening pads Euclidean factors to width three") {
  const Signature e = sig_of("E");
  CHECK(flatten(e, project(e, {1, 2}), true) == Vec{1, 2, 0});

  const Signature h = sig_of("H");
  const Vec fh = flatten(h, project(h, {0, 0}), true);
  CHECK(fh == Vec{1, 0, 0});

  const Signature eh = sig_of("E,H");
  CHECK(flatten(eh, project(eh, Vec(4, 0.0)), true).size() == 6);
  CHECK(flatten(eh, project(eh, Vec(4, 0.0)), false).size() == 5);
}
