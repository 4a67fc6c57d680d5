#include "tropitheta/polytope.hpp"

#include <algorithm>

namespace tropitheta {

Rational cross(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

namespace {

Rational signed_area2(const std::vector<RatVec>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

}  // namespace

Cell Cell::empty(std::size_t ambient) {
  Cell c;
  c.ambient_ = ambient;
  c.dim_ = -1;
  return c;
}

Cell Cell::interval(const Rational& lo, const Rational& hi) {
  Cell c;
  c.ambient_ = 1;
  if (lo > hi) return empty(1);
  c.vertices_ = {RatVec{lo}, RatVec{hi}};
  c.normalize();
  return c;
}

Cell Cell::polygon(std::vector<RatVec> vertices) {
  Cell c;
  c.ambient_ = 2;
  c.vertices_ = std::move(vertices);
  c.normalize();
  return c;
}

Cell Cell::parallelotope(const RatMatrix& Pmat) {
  require(Pmat.square(), ErrorKind::Schema, "period matrix must be square");
  if (Pmat.rows() == 1) {
    Rational p = Pmat(0, 0);
    return p >= 0 ? interval(0, p) : interval(p, 0);
  }
  require(Pmat.rows() == 2, ErrorKind::DimensionUnsupported, "cells are limited to n <= 2");
  RatVec c0 = Pmat.col(0), c1 = Pmat.col(1);
  return polygon({zero_rat_vec(2), c0, c0 + c1, c1});
}

Cell Cell::box(const RatVec& lo, const RatVec& hi) {
  if (lo.size() == 1) return interval(lo[0], hi[0]);
  require(lo.size() == 2, ErrorKind::DimensionUnsupported, "cells are limited to n <= 2");
  return polygon({lo, RatVec{hi[0], lo[1]}, hi, RatVec{lo[0], hi[1]}});
}

void Cell::normalize() {
  if (ambient_ == 1) {
    if (vertices_.empty()) {
      dim_ = -1;
      return;
    }
    Rational lo = vertices_[0][0], hi = vertices_[0][0];
    for (const auto& v : vertices_) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    if (lo == hi) {
      vertices_ = {RatVec{lo}};
      dim_ = 0;
    } else {
      vertices_ = {RatVec{lo}, RatVec{hi}};
      dim_ = 1;
    }
    return;
  }

  std::vector<RatVec> v;
  for (const auto& p : vertices_)
    if (v.empty() || v.back() != p) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.empty()) {
    vertices_.clear();
    dim_ = -1;
    return;
  }
  Rational area2 = v.size() >= 3 ? signed_area2(v) : Rational(0);
  if (area2 == 0) {
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    if (*mn == *mx) {
      vertices_ = {*mn};
      dim_ = 0;
    } else {
      vertices_ = {*mn, *mx};
      dim_ = 1;
    }
    return;
  }
  if (area2 < 0) std::reverse(v.begin(), v.end());
  // Drop vertices lying on the segment between their neighbours.
  bool changed = true;
  while (changed && v.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const RatVec& prev = v[(i + v.size() - 1) % v.size()];
      const RatVec& next = v[(i + 1) % v.size()];
      if (cross(v[i] - prev, next - v[i]) == 0) {
        v.erase(v.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  // Canonical start: lexicographically smallest vertex.
  auto first = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), first, v.end());
  vertices_ = std::move(v);
  dim_ = 2;
}

std::vector<HalfSpace> Cell::halfspaces() const {
  require(full_dimensional(), ErrorKind::InternalInvariantViolated, "H-representation of a degenerate cell");
  std::vector<HalfSpace> hs;
  if (ambient_ == 1) {
    hs.push_back({RatVec{Rational(-1)}, -vertices_[0][0]});
    hs.push_back({RatVec{Rational(1)}, vertices_[1][0]});
    return hs;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const RatVec& p = vertices_[i];
    const RatVec& q = vertices_[(i + 1) % vertices_.size()];
    RatVec normal{q[1] - p[1], p[0] - q[0]};
    hs.push_back({normal, dot(normal, p)});
  }
  return hs;
}

Cell Cell::clip(const HalfSpace& h) const {
  if (is_empty()) return *this;
  if (ambient_ == 1) {
    const Rational& a = h.normal[0];
    Rational lo = vertices_.front()[0], hi = vertices_.back()[0];
    if (a == 0) return h.offset >= 0 ? *this : empty(1);
    Rational t = h.offset / a;
    if (a > 0) hi = std::min(hi, t);
    else lo = std::max(lo, t);
    return interval(lo, hi);
  }
  std::vector<RatVec> out;
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec& p = vertices_[i];
    const RatVec& q = vertices_[(i + 1) % m];
    Rational sp = dot(h.normal, p) - h.offset;
    Rational sq = dot(h.normal, q) - h.offset;
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      Rational t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
    if (m == 1) break;
  }
  Cell c;
  c.ambient_ = 2;
  c.vertices_ = std::move(out);
  c.normalize();
  return c;
}

Cell Cell::intersect(const Cell& other) const {
  if (other.is_empty()) return other;
  Cell c = *this;
  for (const auto& h : other.halfspaces()) {
    c = c.clip(h);
    if (c.is_empty()) break;
  }
  return c;
}

Cell Cell::translate(const RatVec& v) const {
  Cell c = *this;
  for (auto& p : c.vertices_) p = p + v;
  return c;
}

bool Cell::contains(const RatVec& x) const {
  if (is_empty()) return false;
  if (ambient_ == 1) return vertices_.front()[0] <= x[0] && x[0] <= vertices_.back()[0];
  if (dim_ == 0) return x == vertices_[0];
  if (dim_ == 1) {
    const RatVec& a = vertices_[0];
    const RatVec& b = vertices_[1];
    if (cross(b - a, x - a) != 0) return false;
    Rational t = dot(x - a, b - a);
    return t >= 0 && t <= dot(b - a, b - a);
  }
  for (const auto& h : halfspaces())
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

bool Cell::contains(const Cell& other) const {
  for (const auto& v : other.vertices())
    if (!contains(v)) return false;
  return true;
}

bool Cell::strictly_inside(const RatVec& x) const {
  if (!full_dimensional()) return false;
  for (const auto& h : halfspaces())
    if (dot(h.normal, x) >= h.offset) return false;
  return true;
}

RatVec Cell::centroid() const {
  require(!is_empty(), ErrorKind::InternalInvariantViolated, "centroid of an empty cell");
  RatVec c = zero_rat_vec(ambient_);
  for (const auto& v : vertices_) c = c + v;
  return Rational(1, static_cast<long>(vertices_.size())) * c;
}

Rational Cell::measure() const {
  if (!full_dimensional()) return 0;
  if (ambient_ == 1) return vertices_[1][0] - vertices_[0][0];
  return signed_area2(vertices_) / 2;
}

std::vector<RatVec> Cell::interior_samples(std::size_t count) const {
  std::vector<RatVec> out;
  if (is_empty() || count == 0) return out;
  RatVec c = centroid();
  out.push_back(c);
  const std::vector<Rational> pulls = {Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1, 8),
                                       Rational(7, 8)};
  for (const auto& t : pulls)
    for (const auto& v : vertices_) {
      if (out.size() >= count) return out;
      out.push_back(c + t * (v - c));
    }
  return out;
}

Rational Cell::squared_diameter(const RatMatrix& G) const {
  Rational best = 0;
  for (const auto& v : vertices_)
    for (const auto& w : vertices_) {
      RatVec d = v - w;
      best = std::max(best, bilinear(G, d, d));
    }
  return best;
}

}  // namespace tropitheta
