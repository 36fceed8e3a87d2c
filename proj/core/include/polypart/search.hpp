#pragma once

#include "polypart/grid.hpp"
#include "polypart/partition.hpp"

#include <optional>
#include <vector>

namespace polypart {

/// One placed tile image: symmetry index (0..7), grid offset of the image's
/// top-left bounding corner, and the absolute cells it covers.
struct Placement {
  int sym = 0;
  Cell offset{};
  std::vector<Cell> cells;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct SearchResult {
  std::vector<Placement> placements;
  long long covered_cells = 0;
  /// Uncovered full cells plus all partial-cell fractions, in cell-area units.
  Rational leftover_area;
};

/// Every placement of every allowed symmetry image that fits inside the
/// region's full cells; ordered by symmetry index, then row-major offset.
std::vector<Placement> enumerate_placements(const GridRegion& region, const GridTile& tile,
                                            CongruenceMode mode);

/// Exact-cover decision: n disjoint placements covering every full cell
/// exactly once. Returns the lexicographically first solution (by placement
/// index sequence), or nullopt when none exists. Exhaustive at grid scale.
std::optional<SearchResult> perfect_tiling(const GridRegion& region, const GridTile& tile, int n,
                                           CongruenceMode mode);

/// Branch-and-bound maximum-coverage search with up to n disjoint placements;
/// ties broken lexicographically. Throws std::invalid_argument when n tiles
/// could not fit even counting partial cells.
SearchResult best_partial(const GridRegion& region, const GridTile& tile, int n,
                          CongruenceMode mode);

/// Converts a grid solution into an exact-coordinate Partition over
/// region_poly: each placement becomes the outline polygon of its cell set,
/// scaled by cell_size. Throws ValidationError when the region polygon's area
/// does not match the discretization.
Partition lift_to_partition(const Polygon& region_poly, const GridRegion& region,
                            const SearchResult& result, const Rational& cell_size,
                            CongruenceMode mode);

}  // namespace polypart
