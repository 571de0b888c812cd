#include "qsr/geometry.hpp"

namespace qsr {

bool closed_intersect(const Rectangle& a, const Rectangle& b) {
  return a.x.lo <= b.x.hi && b.x.lo <= a.x.hi && a.y.lo <= b.y.hi && b.y.lo <= a.y.hi;
}

bool interiors_intersect(const Rectangle& a, const Rectangle& b) {
  return a.x.lo < b.x.hi && b.x.lo < a.x.hi && a.y.lo < b.y.hi && b.y.lo < a.y.hi;
}

std::string to_string(const Rectangle& r) {
  return "[" + rational_string(r.x.lo) + "," + rational_string(r.x.hi) + "]x[" +
         rational_string(r.y.lo) + "," + rational_string(r.y.hi) + "]";
}

}  // namespace qsr
