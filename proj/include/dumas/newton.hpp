#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "dumas/arith.hpp"
#include "dumas/poly.hpp"

namespace dumas {

// The requested diagram/criterion needs a nonzero constant term.
class CriterionInapplicableError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// One marked coefficient: power index i and p-adic valuation alpha of Ai.
struct NewtonPoint {
  std::int64_t i;
  std::int64_t alpha;
  bool operator==(const NewtonPoint&) const = default;
};

// Diagram of f with respect to prime p. hull_vertices is the broken line
// P0..Pr of slope-change vertices; subdivided_vertices additionally lists
// every integer point interior to a hull segment (Q0..Q_{r+s}).
struct NewtonDiagram {
  std::int64_t prime = 0;
  std::vector<NewtonPoint> points;
  std::vector<NewtonPoint> hull_vertices;
  std::vector<NewtonPoint> subdivided_vertices;
  int segment_count = 0;
};

// One point per nonzero coefficient, in increasing i; zero coefficients
// contribute no point.
inline std::vector<NewtonPoint> newton_points(const Polynomial& f,
                                              std::int64_t p) {
  if (p < 2) throw std::invalid_argument("newton_points: p must be >= 2");
  std::vector<NewtonPoint> points;
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] != 0) points.push_back({i, padic_exponent(f[i], p)});
  return points;
}

namespace detail {

// > 0 when a->b->c turns left; exact in 64 bits at diagram scale
// (i <= degree, alpha <= 63).
inline std::int64_t cross(const NewtonPoint& a, const NewtonPoint& b,
                          const NewtonPoint& c) {
  return (b.i - a.i) * (c.alpha - a.alpha) - (b.alpha - a.alpha) * (c.i - a.i);
}

}  // namespace detail

// Lower convex hull of the points, collinear candidates merged into one
// segment (lattice subdivision reintroduces them). Input must be sorted by
// i and start at i = 0.
inline std::vector<NewtonPoint> lower_hull(std::span<const NewtonPoint> points) {
  if (points.empty()) throw std::invalid_argument("lower_hull: no points");
  if (points.front().i != 0)
    throw std::invalid_argument("lower_hull: missing i = 0 endpoint");
  std::vector<NewtonPoint> hull;
  for (const NewtonPoint& pt : points) {
    while (hull.size() >= 2 &&
           detail::cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  return hull;
}

// Inserts, on each hull segment, the gcd(di, |da|) - 1 interior integer
// points, so segments of the result contain no interior lattice points.
inline std::vector<NewtonPoint> subdivide_lattice(
    std::span<const NewtonPoint> hull) {
  std::vector<NewtonPoint> out;
  if (hull.empty()) return out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const NewtonPoint& a = hull[k];
    const NewtonPoint& b = hull[k + 1];
    const std::int64_t g = std::gcd(b.i - a.i, std::abs(b.alpha - a.alpha));
    const std::int64_t di = (b.i - a.i) / g;
    const std::int64_t da = (b.alpha - a.alpha) / g;
    for (std::int64_t t = 0; t < g; ++t)
      out.push_back({a.i + t * di, a.alpha + t * da});
  }
  out.push_back(hull.back());
  return out;
}

// Full construction: points -> lower hull -> lattice subdivision.
// Requires A0 != 0 (and An != 0, which Polynomial guarantees).
inline NewtonDiagram newton_diagram(const Polynomial& f, std::int64_t p) {
  if (f.degree() < 1)
    throw std::invalid_argument("newton_diagram: degree must be >= 1");
  if (f.constant_term() == 0)
    throw CriterionInapplicableError("newton_diagram: zero constant term");
  NewtonDiagram d;
  d.prime = p;
  d.points = newton_points(f, p);
  d.hull_vertices = lower_hull(d.points);
  d.subdivided_vertices = subdivide_lattice(d.hull_vertices);
  d.segment_count = static_cast<int>(d.subdivided_vertices.size()) - 1;
  return d;
}

}  // namespace dumas
