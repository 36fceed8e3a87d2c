#include "polypart/geom.hpp"

namespace polypart {

namespace {
const ExactKernel kExact{};
}

Polygon normalize(const Polygon& poly) { return normalize(poly, kExact); }

Rational area(const Polygon& poly) { return area(poly, kExact); }

bool is_convex(const Polygon& poly) { return is_convex(poly, kExact); }

std::vector<Polygon> triangulate(const Polygon& poly) { return triangulate(poly, kExact); }

Rational intersection_area(const Polygon& a, const Polygon& b) {
  return intersection_area(a, b, kExact);
}

bool contains(const Polygon& outer, const Polygon& inner) {
  return contains(outer, inner, kExact);
}

Polygon apply_motion(const Polygon& poly, const RigidMotion& motion) {
  if (!motion.valid()) {
    throw ValidationError("rigid motion rotation pair must satisfy c^2 + s^2 = 1");
  }
  Polygon out;
  out.vertices.reserve(poly.size());
  for (const Point& p : poly.vertices) {
    Rational x = p.x;
    Rational y = motion.reflect ? Rational(-p.y) : p.y;
    out.vertices.push_back(Point{motion.c * x - motion.s * y + motion.dx,
                                 motion.s * x + motion.c * y + motion.dy});
  }
  return normalize(out);
}

bool cyclically_equal(const Polygon& a, const Polygon& b) {
  const std::size_t m = a.size();
  if (m != b.size()) return false;
  for (std::size_t off = 0; off < m; ++off) {
    bool all = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(a[i] == b[(i + off) % m])) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace fp {

Polygon lower(const ::polypart::Polygon& poly) {
  Polygon out;
  out.vertices.reserve(poly.size());
  for (const auto& p : poly.vertices) {
    out.vertices.push_back(Point{to_double(p.x), to_double(p.y)});
  }
  return out;
}

}  // namespace fp

}  // namespace polypart
