#include "nlgs/model_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlgs {

namespace {

constexpr double kClampTol = 1e-9;
constexpr double kTangentTol = 1e-8;

void require_same_length(const Vec& x, const Vec& y, const char* what) {
  if (x.size() != y.size())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

double clamp_at_least(double v, double lo, const char* what) {
  if (v >= lo) return v;
  if (v >= lo - kClampTol) return lo;
  throw std::domain_error(std::string(what) + ": argument outside domain");
}

double clamp_at_most(double v, double hi, const char* what) {
  if (v <= hi) return v;
  if (v <= hi + kClampTol) return hi;
  throw std::domain_error(std::string(what) + ": argument outside domain");
}

}  // namespace

double lorentz_inner(const Vec& x, const Vec& y) {
  require_same_length(x, y, "lorentz_inner");
  if (x.size() < 2) throw std::invalid_argument("lorentz_inner: need length >= 2");
  double s = -x[0] * y[0];
  for (std::size_t j = 1; j < x.size(); ++j) s += x[j] * y[j];
  return s;
}

double dot(const Vec& x, const Vec& y) {
  require_same_length(x, y, "dot");
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
  return s;
}

double sinhc(double r) {
  if (std::abs(r) < 1e-6) {
    const double r2 = r * r;
    return 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sinh(r) / r;
}

double sinc(double r) {
  if (std::abs(r) < 1e-6) {
    const double r2 = r * r;
    return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sin(r) / r;
}

Vec origin(const ModelSpace& space) {
  Vec o(static_cast<std::size_t>(space.ambient_dim()), 0.0);
  switch (space.kind) {
    case SpaceKind::Euclidean:
      break;
    case SpaceKind::Hyperboloid:
      o[0] = 1.0 / std::sqrt(-space.curvature);
      break;
    case SpaceKind::Hypersphere:
      o.back() = 1.0 / std::sqrt(space.curvature);
      break;
  }
  return o;
}

bool on_manifold(const ModelSpace& space, const Vec& point, double tol) {
  if (point.size() != static_cast<std::size_t>(space.ambient_dim())) return false;
  switch (space.kind) {
    case SpaceKind::Euclidean:
      return true;
    case SpaceKind::Hyperboloid:
      return point[0] > 0.0 &&
             std::abs(lorentz_inner(point, point) - 1.0 / space.curvature) <= tol;
    case SpaceKind::Hypersphere:
      return std::abs(dot(point, point) - 1.0 / space.curvature) <= tol;
  }
  return false;
}

void require_on_manifold(const ModelSpace& space, const Vec& point, double tol) {
  if (!on_manifold(space, point, tol))
    throw std::invalid_argument("point does not satisfy the model-space constraint");
}

Vec exp_map(const ModelSpace& space, const Vec& base, const Vec& tangent) {
  require_on_manifold(space, base);
  require_same_length(base, tangent, "exp_map");

  switch (space.kind) {
    case SpaceKind::Euclidean: {
      Vec out(base);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += tangent[j];
      return out;
    }
    case SpaceKind::Hyperboloid: {
      if (std::abs(lorentz_inner(base, tangent)) > kTangentTol)
        throw std::invalid_argument("exp_map: tangent not Lorentz-orthogonal to base");
      const double norm2 = lorentz_inner(tangent, tangent);
      const double norm = std::sqrt(std::max(0.0, norm2));
      const double r = std::sqrt(-space.curvature) * norm;
      const double ch = std::cosh(r);
      // sinh(r) v / r, with the r -> 0 limit handled by the series.
      const double sc = sinhc(r);
      Vec out(base.size());
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = ch * base[j] + sc * tangent[j];
      return out;
    }
    case SpaceKind::Hypersphere: {
      if (std::abs(dot(base, tangent)) > kTangentTol)
        throw std::invalid_argument("exp_map: tangent not orthogonal to base");
      const double norm = std::sqrt(dot(tangent, tangent));
      const double r = std::sqrt(space.curvature) * norm;
      const double co = std::cos(r);
      const double sc = sinc(r);
      Vec out(base.size());
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = co * base[j] + sc * tangent[j];
      return out;
    }
  }
  throw std::logic_error("exp_map: unknown space kind");
}

double geodesic_dist(const ModelSpace& space, const Vec& x, const Vec& y) {
  require_on_manifold(space, x);
  require_on_manifold(space, y);
  switch (space.kind) {
    case SpaceKind::Euclidean: {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - y[j];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case SpaceKind::Hyperboloid: {
      const double arg =
          clamp_at_least(space.curvature * lorentz_inner(x, y), 1.0, "geodesic_dist");
      return std::acosh(arg) / std::sqrt(-space.curvature);
    }
    case SpaceKind::Hypersphere: {
      double arg = space.curvature * dot(x, y);
      arg = clamp_at_most(clamp_at_least(arg, -1.0, "geodesic_dist"), 1.0, "geodesic_dist");
      return std::acos(arg) / std::sqrt(space.curvature);
    }
  }
  throw std::logic_error("geodesic_dist: unknown space kind");
}

std::array<double, 2> hyperboloid_to_poincare(const std::array<double, 3>& p) {
  if (p[2] <= -1.0)
    throw std::domain_error("hyperboloid_to_poincare: point not on the upper sheet");
  return {p[0] / (1.0 + p[2]), p[1] / (1.0 + p[2])};
}

std::array<double, 2> poincare_to_uhp(const std::array<double, 2>& p) {
  const double x = p[0];
  const double y = p[1];
  if (x * x + y * y >= 1.0)
    throw std::domain_error("poincare_to_uhp: point not inside the unit disk");
  const double denom = (x - 1.0) * (x - 1.0) + y * y;
  return {-2.0 * y / denom, (1.0 - x * x - y * y) / denom};
}

std::array<double, 2> uhp_to_gminus1(const std::array<double, 2>& p) {
  if (p[1] <= 0.0)
    throw std::domain_error("uhp_to_gminus1: point not in the upper half-plane");
  return {-std::log(p[1]), p[0]};
}

std::array<double, 2> exp0_gminus1(const std::array<double, 2>& v) {
  const double r = std::sqrt(v[0] * v[0] + v[1] * v[1]);
  if (r == 0.0) return {0.0, 0.0};
  const double sc = sinhc(r);
  // Hyperboloid coordinates with the sheet coordinate last, as the disk
  // projection expects.
  const std::array<double, 3> hyp = {v[0] * sc, v[1] * sc, std::cosh(r)};
  return uhp_to_gminus1(poincare_to_uhp(hyperboloid_to_poincare(hyp)));
}

}  // namespace nlgs
