#pragma once

#include <vector>

#include "tropitheta/matrix.hpp"

namespace tropitheta {

// normal·x ≤ offset
struct HalfSpace {
  RatVec normal;
  Rational offset;
};

// A bounded convex polytope in dimension 1 or 2, kept in vertex form (an interval
// [lo, hi], or a counter-clockwise polygon without repeated or collinear vertices).
class Cell {
 public:
  Cell() = default;
  static Cell interval(const Rational& lo, const Rational& hi);
  static Cell polygon(std::vector<RatVec> vertices);
  static Cell empty(std::size_t ambient);
  // Pmat·[0,1]ⁿ for n ≤ 2.
  static Cell parallelotope(const RatMatrix& Pmat);
  static Cell box(const RatVec& lo, const RatVec& hi);

  std::size_t ambient() const { return ambient_; }
  // −1 for the empty set.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_); }
  const std::vector<RatVec>& vertices() const { return vertices_; }

  // Irredundant H-representation; only defined for full-dimensional cells.
  std::vector<HalfSpace> halfspaces() const;
  Cell clip(const HalfSpace& h) const;
  Cell intersect(const Cell& other) const;
  Cell translate(const RatVec& v) const;

  bool contains(const RatVec& x) const;
  bool contains(const Cell& other) const;
  bool strictly_inside(const RatVec& x) const;
  RatVec centroid() const;
  Rational measure() const;
  // Rational points in the relative interior: the centroid and points pulled from the vertices towards it.
  std::vector<RatVec> interior_samples(std::size_t count) const;
  // Squared G-diameter: max over vertex pairs of (v−w)ᵀG(v−w).
  Rational squared_diameter(const RatMatrix& G) const;

  bool operator==(const Cell& o) const { return ambient_ == o.ambient_ && vertices_ == o.vertices_; }

 private:
  void normalize();

  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
};

Rational cross(const RatVec& a, const RatVec& b);

}  // namespace tropitheta
