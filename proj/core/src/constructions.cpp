#include "polypart/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace polypart {

namespace {

Polygon require_triangle(const Polygon& tri) {
  Polygon t = normalize(tri);
  if (t.size() != 3) throw std::invalid_argument("input polygon is not a triangle");
  return t;
}

}  // namespace

std::vector<Polygon> subdivide_triangle(const Polygon& tri, int s) {
  if (s < 1) throw std::invalid_argument("subdivision order must be at least 1");
  Polygon t = require_triangle(tri);
  const Point a = t[0];
  const Point ab = t[1] - a;
  const Point ac = t[2] - a;

  auto grid_point = [&](int i, int j) {
    Rational u(i, s), v(j, s);
    return Point{a.x + u * ab.x + v * ac.x, a.y + u * ab.y + v * ac.y};
  };

  std::vector<Polygon> out;
  out.reserve(static_cast<std::size_t>(s) * s);
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i + j < s; ++i) {
      out.push_back(normalize(Polygon{{grid_point(i, j), grid_point(i + 1, j), grid_point(i, j + 1)}}));
      if (i + j < s - 1) {
        out.push_back(normalize(
            Polygon{{grid_point(i + 1, j), grid_point(i + 1, j + 1), grid_point(i, j + 1)}}));
      }
    }
  }
  return out;
}

Partition quarter_triangle(const Polygon& tri) {
  Polygon t = require_triangle(tri);
  return Partition{t, subdivide_triangle(t, 2), CongruenceMode{false}};
}

TileSetPartition square_tile_sets(const Polygon& poly, int s) {
  if (s < 1) throw std::invalid_argument("subdivision order must be at least 1");
  Polygon region = normalize(poly);
  std::vector<Polygon> tris = triangulate(region);

  const std::size_t n_sets = static_cast<std::size_t>(s) * s;
  TileSetPartition out;
  out.region = region;
  out.mode = CongruenceMode{false};
  out.sets.assign(n_sets, {});
  for (auto& set : out.sets) set.reserve(tris.size());

  for (const Polygon& tr : tris) {
    std::vector<Polygon> pieces = subdivide_triangle(tr, s);
    for (std::size_t q = 0; q < n_sets; ++q) {
      out.sets[q].push_back(std::move(pieces[q]));
    }
  }
  return out;
}

Partition strips(const Polygon& rect, int n) {
  if (n < 1) throw std::invalid_argument("strip count must be at least 1");
  Polygon r = normalize(rect);
  if (r.size() != 4) throw std::invalid_argument("input polygon is not an axis-aligned rectangle");
  for (std::size_t i = 0; i < 4; ++i) {
    Point e = r[(i + 1) % 4] - r[i];
    if (e.x != 0 && e.y != 0) {
      throw std::invalid_argument("input polygon is not an axis-aligned rectangle");
    }
  }
  Rational x0 = r[0].x, x1 = r[0].x, y0 = r[0].y, y1 = r[0].y;
  for (const auto& p : r.vertices) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }

  Partition part;
  part.region = r;
  part.mode = CongruenceMode{false};
  for (int i = 0; i < n; ++i) {
    Rational xa = x0 + Rational(i, n) * (x1 - x0);
    Rational xb = x0 + Rational(i + 1, n) * (x1 - x0);
    part.tiles.push_back(normalize(
        Polygon{{Point{xa, y0}, Point{xb, y0}, Point{xb, y1}, Point{xa, y1}}}));
  }
  return part;
}

Partition equilateral_three_quads() {
  const double h = std::sqrt(3.0) / 2.0;
  auto pt = [](double x, double y) {
    return Point{rational_from_double(x), rational_from_double(y)};
  };
  Point a = pt(0.0, 0.0);
  Point b = pt(1.0, 0.0);
  Point c = pt(0.5, h);
  Point centroid = pt(0.5, h / 3.0);
  Point mab = pt(0.5, 0.0);
  Point mbc = pt(0.75, h / 2.0);
  Point mca = pt(0.25, h / 2.0);

  Partition part;
  part.region = Polygon{{a, b, c}};
  part.mode = CongruenceMode{false};  // the quads map onto each other by 120-degree rotation
  part.tiles = {
      Polygon{{a, mab, centroid, mca}},
      Polygon{{b, mbc, centroid, mab}},
      Polygon{{c, mca, centroid, mbc}},
  };
  return part;
}

}  // namespace polypart
