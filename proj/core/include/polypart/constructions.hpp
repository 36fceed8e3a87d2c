#pragma once

#include "polypart/partition.hpp"

namespace polypart {

/// Partition into N mutually identical multisets of pieces: for each piece
/// index j, the j-th pieces of all sets are mutually congruent, and together
/// the sets cover the region exactly.
struct TileSetPartition {
  Polygon region;
  std::vector<std::vector<Polygon>> sets;
  CongruenceMode mode;
};

/// Midpoint subdivision of a triangle into 4 mutually congruent triangles
/// (three corner copies plus the point-reflected medial triangle).
Partition quarter_triangle(const Polygon& tri);

/// Subdivision by lines parallel to the sides into s^2 congruent triangles;
/// the inverted copies are point reflections, so no reflection is needed.
std::vector<Polygon> subdivide_triangle(const Polygon& tri, int s);

/// Triangulates an m-gon and splits every triangle s^2 ways, yielding s^2
/// identical tile-sets of m-2 triangles each, covering the region exactly.
TileSetPartition square_tile_sets(const Polygon& poly, int s);

/// n congruent vertical strips of an axis-aligned rectangle.
Partition strips(const Polygon& rect, int n);

/// Unit equilateral triangle cut from the centroid to the three edge
/// midpoints: 3 congruent quadrilaterals. Coordinates involve sqrt(3) and are
/// carried as dyadic rationals; check it with verify_approx.
Partition equilateral_three_quads();

}  // namespace polypart
