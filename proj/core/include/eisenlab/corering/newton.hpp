#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenlab/corering/poly.hpp"

namespace eisenlab {

/// A point of a Newton diagram; nullopt ordinate means v = infinity.
struct NPPoint {
  unsigned i;
  std::optional<unsigned> v;
};

struct Vertex {
  unsigned i;
  unsigned v;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Positive rational num/den in lowest terms.
struct Slope {
  unsigned num;
  unsigned den;
  friend bool operator==(const Slope&, const Slope&) = default;
  std::string to_string() const;
};

struct Segment {
  Vertex from;
  Vertex to;
  unsigned length() const { return to.i - from.i; }
  unsigned drop() const { return from.v - to.v; }
  /// drop / length, reduced.
  Slope slope() const;
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Segment> segments() const;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Lower convex hull; infinite points are dropped, collinear interior points
/// are not vertices. Abscissae must strictly increase and the last point
/// must be finite.
NewtonPolygon lower_convex_hull(const std::vector<NPPoint>& points);

/// Running minima z_i of the coefficient valuations of a monic distinguished
/// g: z_0 = v(a_0), z_i = min(z_{i-1}, v(a_i)). Coefficients that vanish mod
/// p^M read as ">=M".
std::vector<Valuation> t_sequence(const PadicPoly& g);

/// The Newton diagram points (i, t) of a t-sequence, infinite/capped entries
/// mapped to nullopt.
std::vector<NPPoint> points_of(const std::vector<Valuation>& seq, unsigned first_index = 0);

}  // namespace eisenlab
