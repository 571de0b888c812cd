#pragma once

#include <string>

#include "qsr/interval.hpp"
#include "qsr/rational.hpp"

namespace qsr {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Axis-aligned closed box, the product of its two projections.
struct Rectangle {
  Interval x;
  Interval y;

  Rectangle() = default;
  Rectangle(Interval ix, Interval iy) : x(std::move(ix)), y(std::move(iy)) {}
  static Rectangle of(long x0, long x1, long y0, long y1) {
    return Rectangle(Interval(x0, x1), Interval(y0, y1));
  }

  bool operator==(const Rectangle& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Rectangle& o) const { return !(*this == o); }

  bool contains(const Point& p) const {
    return x.lo <= p.x && p.x <= x.hi && y.lo <= p.y && p.y <= y.hi;
  }
  bool interior_contains(const Point& p) const {
    return x.lo < p.x && p.x < x.hi && y.lo < p.y && p.y < y.hi;
  }
};

/// Closed boxes share at least one point.
bool closed_intersect(const Rectangle& a, const Rectangle& b);
/// Open interiors share a point.
bool interiors_intersect(const Rectangle& a, const Rectangle& b);

std::string to_string(const Rectangle& r);

}  // namespace qsr
