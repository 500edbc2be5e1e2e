#include "eisenlab/corering/newton.hpp"

#include <numeric>

#include "eisenlab/error.hpp"

namespace eisenlab {

std::string Slope::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Slope Segment::slope() const {
  unsigned h = drop(), l = length();
  unsigned g = std::gcd(h, l);
  if (g == 0) return {0, 1};
  return {h / g, l / g};
}

NewtonPolygon::NewtonPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

std::vector<Segment> NewtonPolygon::segments() const {
  std::vector<Segment> out;
  for (std::size_t k = 1; k < vertices_.size(); ++k) out.push_back({vertices_[k - 1], vertices_[k]});
  return out;
}

NewtonPolygon lower_convex_hull(const std::vector<NPPoint>& points) {
  std::vector<Vertex> finite;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0 && points[k].i <= points[k - 1].i)
      throw DomainError("lower_convex_hull: abscissae must strictly increase");
    if (points[k].v) finite.push_back({points[k].i, *points[k].v});
  }
  if (points.empty() || !points.back().v) throw DomainError("lower_convex_hull: last point must be finite");

  // Monotone chain. Pop the middle point unless the turn is strictly convex,
  // so collinear points are removed.
  std::vector<Vertex> hull;
  for (const Vertex& q : finite) {
    while (hull.size() >= 2) {
      const Vertex& a = hull[hull.size() - 2];
      const Vertex& b = hull.back();
      i64 cross = (static_cast<i64>(b.i) - a.i) * (static_cast<i64>(q.v) - a.v) -
                  (static_cast<i64>(b.v) - a.v) * (static_cast<i64>(q.i) - a.i);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<Valuation> t_sequence(const PadicPoly& g) {
  if (!g.is_monic()) throw DomainError("t_sequence: polynomial must be monic");
  const Modulus& m = g.modulus();
  const int n = g.degree();
  for (int i = 0; i < n; ++i) {
    if (m.is_unit(g.coeff(i))) throw DomainError("t_sequence: polynomial is not distinguished");
  }
  std::vector<Valuation> z;
  z.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    Valuation v = m.valuation(g.coeff(i));
    z.push_back(i == 0 ? v : Valuation::min(z.back(), v));
  }
  return z;
}

std::vector<NPPoint> points_of(const std::vector<Valuation>& seq, unsigned first_index) {
  std::vector<NPPoint> pts;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    NPPoint pt{static_cast<unsigned>(first_index + k), std::nullopt};
    if (seq[k].is_finite()) pt.v = seq[k].value();
    pts.push_back(pt);
  }
  return pts;
}

}  // namespace eisenlab
