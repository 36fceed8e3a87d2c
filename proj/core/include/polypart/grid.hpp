#pragma once

#include "polypart/congruence.hpp"
#include "polypart/geom.hpp"

#include <vector>

namespace polypart {

/// Unit cell at (col, row); row 0 is the top row of the grid file, so the
/// geometric y coordinate of a cell's bottom edge is height - row - 1.
struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

/// Edge-connected polyomino, translated so min col = min row = 0, cells
/// sorted row-major.
struct GridTile {
  std::vector<Cell> cells;

  std::size_t size() const { return cells.size(); }

  /// Normalizes and validates (nonempty, no duplicates, edge-connected).
  static GridTile from_cells(std::vector<Cell> cells);

  friend bool operator==(const GridTile&, const GridTile&) = default;
  friend bool operator<(const GridTile& a, const GridTile& b) { return a.cells < b.cells; }
};

struct PartialCell {
  Cell cell;
  Rational fraction;  // in (0,1): the part of the cell inside the true region
};

/// Cell-set discretization of a region: full cells plus optional partial
/// cells along the true boundary.
struct GridRegion {
  int width = 0;
  int height = 0;
  std::vector<Cell> cells;  // sorted row-major, full cells only
  std::vector<PartialCell> partials;

  std::size_t size() const { return cells.size(); }

  /// Uncovered-area unit count: |cells| + sum of partial fractions.
  Rational total_area() const;

  /// Throws ValidationError when structurally inconsistent.
  void validate() const;
};

/// Image of a tile under one of the 8 square-grid symmetries (0..3 rotations,
/// 4..7 the same after mirroring), renormalized.
GridTile transform_tile(const GridTile& tile, int sym);

/// Distinct images under the 4 rotations, plus the mirrored rotations when
/// the mode allows reflection. Ordered by first generating symmetry index.
std::vector<GridTile> symmetries(const GridTile& tile, CongruenceMode mode);

/// Least image over the allowed symmetries; identity for canonical tiles.
GridTile canonical_tile(const GridTile& tile, CongruenceMode mode);

/// All polyominoes of c cells up to the symmetries the mode permits (free
/// polyominoes with reflection, one-sided without), canonical forms in
/// deterministic sorted order.
std::vector<GridTile> enumerate_tiles(int c, CongruenceMode mode);

/// Boundary polygon of a cell set placed on a grid of the given height,
/// scaled by cell_size. Throws ValidationError when the outline is not a
/// simple polygon (holes or pinch points).
Polygon cells_outline(const std::vector<Cell>& cells, int grid_height, const Rational& cell_size);

}  // namespace polypart
