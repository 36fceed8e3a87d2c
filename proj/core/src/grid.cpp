#include "polypart/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polypart {

namespace {

std::vector<Cell> normalized_cells(std::vector<Cell> cells) {
  int min_col = cells[0].col, min_row = cells[0].row;
  for (const Cell& c : cells) {
    min_col = std::min(min_col, c.col);
    min_row = std::min(min_row, c.row);
  }
  for (Cell& c : cells) {
    c.col -= min_col;
    c.row -= min_row;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

GridTile GridTile::from_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw ValidationError("tile has no cells");
  cells = normalized_cells(std::move(cells));
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw ValidationError("tile has duplicate cells");
  }
  // Edge connectivity.
  std::set<Cell> todo(cells.begin() + 1, cells.end());
  std::vector<Cell> stack{cells[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.col + 1, c.row}, Cell{c.col - 1, c.row}, Cell{c.col, c.row + 1},
                    Cell{c.col, c.row - 1}}) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        todo.erase(it);
        stack.push_back(nb);
      }
    }
  }
  if (!todo.empty()) throw ValidationError("tile cells are not edge-connected");
  return GridTile{std::move(cells)};
}

Rational GridRegion::total_area() const {
  Rational total(static_cast<long long>(cells.size()));
  for (const auto& pc : partials) total += pc.fraction;
  return total;
}

void GridRegion::validate() const {
  if (width < 1 || height < 1) throw ValidationError("grid dimensions must be positive");
  if (cells.empty()) throw ValidationError("grid region has no full cells");
  if (!std::is_sorted(cells.begin(), cells.end())) {
    throw ValidationError("grid region cells are not sorted");
  }
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw ValidationError("grid region has duplicate cells");
  }
  auto in_bounds = [&](const Cell& c) {
    return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
  };
  for (const Cell& c : cells) {
    if (!in_bounds(c)) throw ValidationError("grid cell out of bounds");
  }
  std::set<Cell> full(cells.begin(), cells.end());
  std::set<Cell> seen;
  for (const auto& pc : partials) {
    if (!in_bounds(pc.cell)) throw ValidationError("partial cell out of bounds");
    if (full.count(pc.cell)) throw ValidationError("cell is both full and partial");
    if (!seen.insert(pc.cell).second) throw ValidationError("duplicate partial cell");
    if (!(pc.fraction > 0 && pc.fraction < 1)) {
      throw ValidationError("partial cell fraction must lie strictly between 0 and 1");
    }
  }
}

GridTile transform_tile(const GridTile& tile, int sym) {
  if (sym < 0 || sym > 7) throw std::invalid_argument("symmetry index must be in 0..7");
  std::vector<Cell> out;
  out.reserve(tile.cells.size());
  for (Cell c : tile.cells) {
    if (sym >= 4) c.col = -c.col;  // mirror
    int col = c.col, row = c.row;
    switch (sym % 4) {  // quarter turns
      case 0:
        break;
      case 1:
        c.col = -row;
        c.row = col;
        break;
      case 2:
        c.col = -col;
        c.row = -row;
        break;
      case 3:
        c.col = row;
        c.row = -col;
        break;
    }
    out.push_back(c);
  }
  return GridTile{normalized_cells(std::move(out))};
}

std::vector<GridTile> symmetries(const GridTile& tile, CongruenceMode mode) {
  std::vector<GridTile> out;
  const int count = mode.allow_reflection ? 8 : 4;
  for (int s = 0; s < count; ++s) {
    GridTile img = transform_tile(tile, s);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
  }
  return out;
}

GridTile canonical_tile(const GridTile& tile, CongruenceMode mode) {
  GridTile best = transform_tile(tile, 0);
  const int count = mode.allow_reflection ? 8 : 4;
  for (int s = 1; s < count; ++s) {
    GridTile img = transform_tile(tile, s);
    if (img < best) best = std::move(img);
  }
  return best;
}

std::vector<GridTile> enumerate_tiles(int c, CongruenceMode mode) {
  if (c < 1) throw std::invalid_argument("cell count must be at least 1");
  std::set<GridTile> level{canonical_tile(GridTile{{Cell{0, 0}}}, mode)};
  for (int size = 2; size <= c; ++size) {
    std::set<GridTile> next;
    for (const GridTile& t : level) {
      std::set<Cell> cells(t.cells.begin(), t.cells.end());
      for (const Cell& cell : t.cells) {
        for (Cell nb : {Cell{cell.col + 1, cell.row}, Cell{cell.col - 1, cell.row},
                        Cell{cell.col, cell.row + 1}, Cell{cell.col, cell.row - 1}}) {
          if (cells.count(nb)) continue;
          std::vector<Cell> grown = t.cells;
          grown.push_back(nb);
          next.insert(canonical_tile(GridTile{normalized_cells(std::move(grown))}, mode));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

Polygon cells_outline(const std::vector<Cell>& cells, int grid_height, const Rational& cell_size) {
  if (cells.empty()) throw ValidationError("cannot outline an empty cell set");
  std::set<Cell> in(cells.begin(), cells.end());

  using IPoint = std::pair<int, int>;  // grid-corner coordinates (x, y-up)
  std::map<IPoint, IPoint> next_corner;
  auto add_edge = [&](IPoint a, IPoint b) {
    if (!next_corner.emplace(a, b).second) {
      throw ValidationError("cell set outline touches itself");
    }
  };

  for (const Cell& c : cells) {
    int x = c.col;
    int y = grid_height - c.row - 1;  // bottom edge of the cell square
    // Directed boundary edges keep the interior on the left (counterclockwise).
    if (!in.count(Cell{c.col, c.row + 1})) add_edge({x, y}, {x + 1, y});          // below
    if (!in.count(Cell{c.col + 1, c.row})) add_edge({x + 1, y}, {x + 1, y + 1});  // right
    if (!in.count(Cell{c.col, c.row - 1})) add_edge({x + 1, y + 1}, {x, y + 1});  // above
    if (!in.count(Cell{c.col - 1, c.row})) add_edge({x, y + 1}, {x, y});          // left
  }

  IPoint start = next_corner.begin()->first;
  std::vector<IPoint> loop;
  IPoint cur = start;
  do {
    loop.push_back(cur);
    auto it = next_corner.find(cur);
    if (it == next_corner.end()) throw ValidationError("cell set outline is not closed");
    cur = it->second;
    next_corner.erase(it);
  } while (cur != start);
  if (!next_corner.empty()) {
    throw ValidationError("cell set outline has more than one boundary loop");
  }

  Polygon poly;
  poly.vertices.reserve(loop.size());
  for (const auto& [x, y] : loop) {
    poly.vertices.push_back(Point{cell_size * x, cell_size * y});
  }
  return normalize(poly);  // merges the collinear run of unit steps
}

}  // namespace polypart
