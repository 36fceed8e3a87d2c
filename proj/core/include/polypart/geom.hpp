#pragma once

#include "polypart/errors.hpp"
#include "polypart/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace polypart {

template <class S>
struct PointT {
  S x{};
  S y{};

  friend bool operator==(const PointT& a, const PointT& b) { return a.x == b.x && a.y == b.y; }
  friend PointT operator+(const PointT& a, const PointT& b) { return {a.x + b.x, a.y + b.y}; }
  friend PointT operator-(const PointT& a, const PointT& b) { return {a.x - b.x, a.y - b.y}; }
};

template <class S>
S cross(const PointT<S>& u, const PointT<S>& v) {
  return u.x * v.y - u.y * v.x;
}

template <class S>
S dot(const PointT<S>& u, const PointT<S>& v) {
  return u.x * v.x + u.y * v.y;
}

/// Simple polygon as a cyclic vertex list. Operations other than normalize()
/// expect a normalized polygon: counterclockwise, simple, no collinear runs.
template <class S>
struct PolygonT {
  std::vector<PointT<S>> vertices;

  PolygonT() = default;
  explicit PolygonT(std::vector<PointT<S>> v) : vertices(std::move(v)) {}

  std::size_t size() const { return vertices.size(); }
  const PointT<S>& operator[](std::size_t i) const { return vertices[i]; }
  PointT<S>& operator[](std::size_t i) { return vertices[i]; }
};

using Point = PointT<Rational>;
using Polygon = PolygonT<Rational>;

// Approximate-mode carriers (floating coordinates, tolerance-based predicates).
namespace fp {
using Point = PointT<double>;
using Polygon = PolygonT<double>;
}  // namespace fp

/// Orientation-preserving congruence motion: optional reflection across the
/// x-axis, then rotation by the exact unit-circle point (c, s), then
/// translation. Valid only when c^2 + s^2 = 1.
struct RigidMotion {
  Rational c{1};
  Rational s{0};
  Rational dx{0};
  Rational dy{0};
  bool reflect = false;

  bool valid() const { return c * c + s * s == 1; }

  static RigidMotion translation(Rational dx, Rational dy) {
    return {Rational(1), Rational(0), std::move(dx), std::move(dy), false};
  }
  static RigidMotion rotation(Rational c, Rational s) {
    return {std::move(c), std::move(s), Rational(0), Rational(0), false};
  }
  static RigidMotion reflection() {
    return {Rational(1), Rational(0), Rational(0), Rational(0), true};
  }
};

// ---------------------------------------------------------------------------
// Comparison kernels. ExactKernel decides signs exactly over rationals;
// EpsKernel collapses values within eps of zero, enabling constructions with
// irrational coordinates carried as floating point.
// ---------------------------------------------------------------------------

struct ExactKernel {
  using Scalar = Rational;
  static constexpr bool exact = true;

  int sign(const Rational& v) const { return v.sign(); }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  bool point_eq(const Point& a, const Point& b) const { return a == b; }
  Rational abs(const Rational& v) const { return v < 0 ? Rational(-v) : v; }
};

struct EpsKernel {
  using Scalar = double;
  static constexpr bool exact = false;

  double eps = 1e-9;

  int sign(double v) const { return v > eps ? 1 : (v < -eps ? -1 : 0); }
  bool eq(double a, double b) const { return std::fabs(a - b) <= eps; }
  bool point_eq(const fp::Point& a, const fp::Point& b) const {
    return std::fabs(a.x - b.x) <= eps && std::fabs(a.y - b.y) <= eps;
  }
  double abs(double v) const { return std::fabs(v); }
};

namespace detail {

template <class S>
S orient(const PointT<S>& a, const PointT<S>& b, const PointT<S>& c) {
  return cross(b - a, c - a);
}

template <class S>
S twice_signed_area(const PolygonT<S>& poly) {
  S acc{};
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

template <class S>
struct Box {
  S minx{}, miny{}, maxx{}, maxy{};

  static Box of(const PolygonT<S>& poly) {
    Box b{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
    for (const auto& p : poly.vertices) {
      b.minx = std::min(b.minx, p.x);
      b.miny = std::min(b.miny, p.y);
      b.maxx = std::max(b.maxx, p.x);
      b.maxy = std::max(b.maxy, p.y);
    }
    return b;
  }

  bool overlaps(const Box& o) const {
    return !(maxx < o.minx || o.maxx < minx || maxy < o.miny || o.maxy < miny);
  }
};

// p collinear with [a,b] and within its bounding box (closed segment).
template <class K, class S = typename K::Scalar>
bool on_segment(const PointT<S>& a, const PointT<S>& b, const PointT<S>& p, const K& k) {
  if (k.sign(orient(a, b, p)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test (touching counts).
template <class K, class S = typename K::Scalar>
bool segments_intersect(const PointT<S>& a, const PointT<S>& b, const PointT<S>& c,
                        const PointT<S>& d, const K& k) {
  int o1 = k.sign(orient(a, b, c));
  int o2 = k.sign(orient(a, b, d));
  int o3 = k.sign(orient(c, d, a));
  int o4 = k.sign(orient(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c, k)) return true;
  if (o2 == 0 && on_segment(a, b, d, k)) return true;
  if (o3 == 0 && on_segment(c, d, a, k)) return true;
  if (o4 == 0 && on_segment(c, d, b, k)) return true;
  return false;
}

template <class K, class S = typename K::Scalar>
bool is_simple(const PolygonT<S>& poly, const K& k) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m], k)) return false;
    }
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Core operations, templated over the comparison kernel.
// ---------------------------------------------------------------------------

/// Validates and canonicalizes a vertex list: consecutive duplicates dropped,
/// straight-through vertices removed, orientation forced counterclockwise.
/// Throws ValidationError for self-intersecting or degenerate input.
template <class K, class S = typename K::Scalar>
PolygonT<S> normalize(const PolygonT<S>& poly, const K& k) {
  std::vector<PointT<S>> v = poly.vertices;
  if (v.size() < 3) throw ValidationError("polygon needs at least 3 vertices");

  // Drop consecutive duplicates (cyclically).
  {
    std::vector<PointT<S>> out;
    for (const auto& p : v) {
      if (out.empty() || !k.point_eq(out.back(), p)) out.push_back(p);
    }
    while (out.size() > 1 && k.point_eq(out.front(), out.back())) out.pop_back();
    v = std::move(out);
  }

  // Remove straight-through vertices until stable; a 180-degree spike means
  // the boundary doubles back on itself.
  bool changed = true;
  while (changed) {
    changed = false;
    if (v.size() < 3) throw ValidationError("polygon degenerates to fewer than 3 vertices");
    std::vector<PointT<S>> out;
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
      PointT<S> prev = v[(i + m - 1) % m] ;
      PointT<S> next = v[(i + 1) % m];
      PointT<S> e0 = v[i] - prev;
      PointT<S> e1 = next - v[i];
      if (k.sign(cross(e0, e1)) == 0) {
        if (k.sign(dot(e0, e1)) <= 0) throw ValidationError("polygon boundary doubles back on itself");
        changed = true;  // straight run: drop this vertex
        continue;
      }
      out.push_back(v[i]);
    }
    v = std::move(out);
  }
  if (v.size() < 3) throw ValidationError("polygon degenerates to fewer than 3 vertices");

  PolygonT<S> result{std::move(v)};
  S a2 = detail::twice_signed_area(result);
  int s = k.sign(a2);
  if (s == 0) throw ValidationError("polygon has zero area");
  if (s < 0) std::reverse(result.vertices.begin(), result.vertices.end());

  if (!detail::is_simple(result, k)) throw ValidationError("polygon is self-intersecting");
  return result;
}

/// Exact positive area (shoelace). Throws on zero-area input.
template <class K, class S = typename K::Scalar>
S area(const PolygonT<S>& poly, const K& k) {
  if (poly.size() < 3) throw ValidationError("polygon needs at least 3 vertices");
  S a2 = detail::twice_signed_area(poly);
  if (k.sign(a2) == 0) throw ValidationError("polygon has zero area");
  return k.abs(a2) / 2;
}

/// True iff every turn of the counterclockwise boundary is a left (or
/// straight) turn.
template <class K, class S = typename K::Scalar>
bool is_convex(const PolygonT<S>& poly, const K& k) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % m];
    const auto& c = v[(i + 2) % m];
    if (k.sign(detail::orient(a, b, c)) < 0) return false;
  }
  return true;
}

namespace detail {

template <class K, class S = typename K::Scalar>
bool point_in_triangle_inclusive(const PointT<S>& a, const PointT<S>& b, const PointT<S>& c,
                                 const PointT<S>& p, const K& k) {
  return k.sign(orient(a, b, p)) >= 0 && k.sign(orient(b, c, p)) >= 0 &&
         k.sign(orient(c, a, p)) >= 0;
}

}  // namespace detail

/// Splits a normalized polygon with m vertices into exactly m-2 triangles:
/// a fan for convex input, ear clipping otherwise.
template <class K, class S = typename K::Scalar>
std::vector<PolygonT<S>> triangulate(const PolygonT<S>& poly, const K& k) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
  std::vector<PolygonT<S>> tris;
  tris.reserve(m - 2);

  if (is_convex(poly, k)) {
    for (std::size_t i = 1; i + 1 < m; ++i) {
      tris.push_back(PolygonT<S>{{v[0], v[i], v[i + 1]}});
    }
    return tris;
  }

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;

  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      std::size_t ip = idx[(t + idx.size() - 1) % idx.size()];
      std::size_t ic = idx[t];
      std::size_t in = idx[(t + 1) % idx.size()];
      if (k.sign(detail::orient(v[ip], v[ic], v[in])) <= 0) continue;
      bool blocked = false;
      for (std::size_t w : idx) {
        if (w == ip || w == ic || w == in) continue;
        if (detail::point_in_triangle_inclusive(v[ip], v[ic], v[in], v[w], k)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back(PolygonT<S>{{v[ip], v[ic], v[in]}});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(t));
      clipped = true;
      break;
    }
    if (!clipped) throw ValidationError("ear clipping failed; polygon is not simple");
  }
  tris.push_back(PolygonT<S>{{v[idx[0]], v[idx[1]], v[idx[2]]}});
  return tris;
}

namespace detail {

// Sutherland-Hodgman clip of a convex subject against a convex clip region,
// both counterclockwise. Exact intersection points in the exact kernel.
template <class K, class S = typename K::Scalar>
PolygonT<S> clip_convex(const PolygonT<S>& subject, const PolygonT<S>& clip, const K& k) {
  std::vector<PointT<S>> out = subject.vertices;
  const auto& cv = clip.vertices;
  for (std::size_t ci = 0; ci < cv.size() && !out.empty(); ++ci) {
    const PointT<S>& c1 = cv[ci];
    const PointT<S>& c2 = cv[(ci + 1) % cv.size()];
    std::vector<PointT<S>> in = std::move(out);
    out.clear();
    for (std::size_t i = 0; i < in.size(); ++i) {
      const PointT<S>& s = in[i];
      const PointT<S>& e = in[(i + 1) % in.size()];
      S ds = orient(c1, c2, s);
      S de = orient(c1, c2, e);
      int ss = k.sign(ds);
      int se = k.sign(de);
      auto intersect = [&]() {
        S t = ds / (ds - de);
        return PointT<S>{s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)};
      };
      if (se >= 0) {
        if (ss < 0) out.push_back(intersect());
        out.push_back(e);
      } else if (ss > 0) {
        out.push_back(intersect());
      }
    }
  }
  return PolygonT<S>{std::move(out)};
}

template <class K, class S = typename K::Scalar>
S clip_area(const PolygonT<S>& subject, const PolygonT<S>& clip, const K& k) {
  if (subject.size() < 3) return S{};
  PolygonT<S> r = clip_convex(subject, clip, k);
  if (r.size() < 3) return S{};
  S a2 = twice_signed_area(r);
  if (k.sign(a2) <= 0) return S{};  // degenerate sliver
  return a2 / 2;
}

template <class K, class S = typename K::Scalar>
S triangulation_intersection_area(const std::vector<PolygonT<S>>& ta,
                                  const std::vector<PolygonT<S>>& tb, const K& k) {
  std::vector<Box<S>> boxes_b;
  boxes_b.reserve(tb.size());
  for (const auto& t : tb) boxes_b.push_back(Box<S>::of(t));
  S total{};
  for (const auto& a : ta) {
    Box<S> ba = Box<S>::of(a);
    for (std::size_t j = 0; j < tb.size(); ++j) {
      if (!ba.overlaps(boxes_b[j])) continue;
      total += clip_area(a, tb[j], k);
    }
  }
  return total;
}

}  // namespace detail

/// Exact area of the intersection, via triangulation and pairwise convex
/// clipping. Inputs need not be convex.
template <class K, class S = typename K::Scalar>
S intersection_area(const PolygonT<S>& a, const PolygonT<S>& b, const K& k) {
  return detail::triangulation_intersection_area(triangulate(a, k), triangulate(b, k), k);
}

/// inner lies (weakly) inside outer: their intersection has inner's full area.
template <class K, class S = typename K::Scalar>
bool contains(const PolygonT<S>& outer, const PolygonT<S>& inner, const K& k) {
  return k.sign(area(inner, k) - intersection_area(outer, inner, k)) == 0;
}

enum class PointLoc { Vertex, Boundary, Interior, Outside };

/// Classifies a point against a normalized polygon.
template <class K, class S = typename K::Scalar>
PointLoc locate_point(const PolygonT<S>& poly, const PointT<S>& p, const K& k) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  for (const auto& q : v) {
    if (k.point_eq(q, p)) return PointLoc::Vertex;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (detail::on_segment(v[i], v[(i + 1) % m], p, k)) return PointLoc::Boundary;
  }
  // Crossing number; p is strictly off the boundary here, so the half-open
  // vertex rule is exact.
  bool inside = false;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % m];
    if ((a.y > p.y) != (b.y > p.y)) {
      int s = k.sign(detail::orient(a, b, p));
      if (b.y > a.y ? s > 0 : s < 0) inside = !inside;
    }
  }
  return inside ? PointLoc::Interior : PointLoc::Outside;
}

// ---------------------------------------------------------------------------
// Exact-mode surface (the primary API).
// ---------------------------------------------------------------------------

Polygon normalize(const Polygon& poly);
Rational area(const Polygon& poly);
bool is_convex(const Polygon& poly);
std::vector<Polygon> triangulate(const Polygon& poly);
Rational intersection_area(const Polygon& a, const Polygon& b);
bool contains(const Polygon& outer, const Polygon& inner);

/// Vertexwise image under (optional reflection) then rotation then
/// translation; result re-normalized. Throws on an invalid rotation pair.
Polygon apply_motion(const Polygon& poly, const RigidMotion& motion);

/// True iff the vertex lists agree up to cyclic rotation.
bool cyclically_equal(const Polygon& a, const Polygon& b);

namespace fp {
/// Rational polygon lowered to floating point for approximate-mode checks.
Polygon lower(const ::polypart::Polygon& poly);
}  // namespace fp

}  // namespace polypart
