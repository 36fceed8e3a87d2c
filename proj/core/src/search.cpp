#include "polypart/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace polypart {

namespace {

// Fixed-capacity bitset over region cell indices.
struct Mask {
  std::vector<std::uint64_t> words;

  explicit Mask(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }

  bool disjoint(const Mask& o) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & o.words[w]) return false;
    }
    return true;
  }
  void merge(const Mask& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
  }
  void subtract(const Mask& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] &= ~o.words[w];
  }
  long long count() const {
    long long c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
};

struct Instance {
  std::vector<Placement> placements;
  std::vector<Mask> masks;
  std::vector<std::vector<int>> cell_to_placements;
  std::size_t cell_count = 0;
};

Instance build_instance(const GridRegion& region, const GridTile& tile, CongruenceMode mode) {
  Instance inst;
  inst.placements = enumerate_placements(region, tile, mode);
  inst.cell_count = region.cells.size();

  std::map<Cell, int> cell_index;
  for (std::size_t i = 0; i < region.cells.size(); ++i) {
    cell_index[region.cells[i]] = static_cast<int>(i);
  }
  inst.cell_to_placements.assign(inst.cell_count, {});
  inst.masks.reserve(inst.placements.size());
  for (std::size_t pi = 0; pi < inst.placements.size(); ++pi) {
    Mask m(inst.cell_count);
    for (const Cell& c : inst.placements[pi].cells) {
      int idx = cell_index.at(c);
      m.set(static_cast<std::size_t>(idx));
      inst.cell_to_placements[static_cast<std::size_t>(idx)].push_back(static_cast<int>(pi));
    }
    inst.masks.push_back(std::move(m));
  }
  return inst;
}

// Exact-cover existence: can the cells outside `covered` be tiled using only
// placements with index > floor? Most-constrained-cell-first branching.
bool cover_exists(const Instance& inst, Mask covered, int floor) {
  const std::size_t total = inst.cell_count;
  if (covered.count() == static_cast<long long>(total)) return true;

  int best_cell = -1;
  std::size_t best_count = SIZE_MAX;
  for (std::size_t c = 0; c < total; ++c) {
    if (covered.test(c)) continue;
    std::size_t count = 0;
    for (int pi : inst.cell_to_placements[c]) {
      if (pi > floor && inst.masks[static_cast<std::size_t>(pi)].disjoint(covered)) ++count;
    }
    if (count < best_count) {
      best_count = count;
      best_cell = static_cast<int>(c);
      if (count == 0) return false;
    }
  }
  for (int pi : inst.cell_to_placements[static_cast<std::size_t>(best_cell)]) {
    if (pi <= floor || !inst.masks[static_cast<std::size_t>(pi)].disjoint(covered)) continue;
    Mask next = covered;
    next.merge(inst.masks[static_cast<std::size_t>(pi)]);
    if (cover_exists(inst, std::move(next), floor)) return true;
  }
  return false;
}

Rational partial_fraction_total(const GridRegion& region) {
  Rational total{};
  for (const auto& pc : region.partials) total += pc.fraction;
  return total;
}

}  // namespace

std::vector<Placement> enumerate_placements(const GridRegion& region, const GridTile& tile,
                                            CongruenceMode mode) {
  region.validate();
  if (tile.cells.empty()) throw std::invalid_argument("tile has no cells");

  std::set<Cell> full(region.cells.begin(), region.cells.end());

  // Distinct images, keyed by the first symmetry index producing them.
  std::vector<std::pair<int, GridTile>> images;
  const int sym_count = mode.allow_reflection ? 8 : 4;
  for (int s = 0; s < sym_count; ++s) {
    GridTile img = transform_tile(tile, s);
    bool dup = false;
    for (const auto& [_, existing] : images) {
      if (existing == img) {
        dup = true;
        break;
      }
    }
    if (!dup) images.emplace_back(s, std::move(img));
  }

  std::vector<Placement> out;
  for (const auto& [sym, img] : images) {
    int w = 0, h = 0;
    for (const Cell& c : img.cells) {
      w = std::max(w, c.col + 1);
      h = std::max(h, c.row + 1);
    }
    for (int row = 0; row + h <= region.height; ++row) {
      for (int col = 0; col + w <= region.width; ++col) {
        Placement pl;
        pl.sym = sym;
        pl.offset = Cell{col, row};
        pl.cells.reserve(img.cells.size());
        bool fits = true;
        for (const Cell& c : img.cells) {
          Cell abs{c.col + col, c.row + row};
          if (!full.count(abs)) {
            fits = false;
            break;
          }
          pl.cells.push_back(abs);
        }
        if (fits) out.push_back(std::move(pl));
      }
    }
  }
  return out;
}

std::optional<SearchResult> perfect_tiling(const GridRegion& region, const GridTile& tile, int n,
                                           CongruenceMode mode) {
  region.validate();
  if (n < 1) return std::nullopt;
  if (region.cells.size() != tile.cells.size() * static_cast<std::size_t>(n)) {
    return std::nullopt;
  }
  Instance inst = build_instance(region, tile, mode);
  Mask covered(inst.cell_count);
  if (!cover_exists(inst, covered, -1)) return std::nullopt;

  // Grow the lexicographically least solution one placement index at a time,
  // re-checking completability after each tentative choice.
  SearchResult result;
  int floor = -1;
  while (covered.count() < static_cast<long long>(inst.cell_count)) {
    bool advanced = false;
    for (int pi = floor + 1; pi < static_cast<int>(inst.placements.size()); ++pi) {
      if (!inst.masks[static_cast<std::size_t>(pi)].disjoint(covered)) continue;
      Mask next = covered;
      next.merge(inst.masks[static_cast<std::size_t>(pi)]);
      if (cover_exists(inst, next, pi)) {
        covered = std::move(next);
        result.placements.push_back(inst.placements[static_cast<std::size_t>(pi)]);
        floor = pi;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("exact cover extraction lost a witnessed solution");
  }

  result.covered_cells = static_cast<long long>(inst.cell_count);
  result.leftover_area = partial_fraction_total(region);
  return result;
}

SearchResult best_partial(const GridRegion& region, const GridTile& tile, int n,
                          CongruenceMode mode) {
  region.validate();
  if (n < 0) throw std::invalid_argument("tile count must be nonnegative");
  const long long tile_size = static_cast<long long>(tile.cells.size());
  const long long full_cells = static_cast<long long>(region.cells.size());
  if (static_cast<long long>(n) * tile_size >
      full_cells + static_cast<long long>(region.partials.size())) {
    throw std::invalid_argument("n tiles exceed the region's cell budget");
  }

  Instance inst = build_instance(region, tile, mode);
  const int pcount = static_cast<int>(inst.placements.size());
  const long long global_ub = std::min(static_cast<long long>(n) * tile_size, full_cells);

  std::vector<int> best;
  long long best_covered = -1;
  std::vector<int> chosen;

  // Include-first DFS in index order visits candidate sets in lexicographic
  // order, so the first optimum found is the lexicographic tie-break winner.
  auto dfs = [&](auto&& self, int idx, const Mask& used, long long covered) -> void {
    if (best_covered == global_ub) return;
    if (covered > best_covered) {
      best_covered = covered;
      best = chosen;
    }
    if (idx >= pcount || static_cast<int>(chosen.size()) == n) return;
    long long rem = n - static_cast<long long>(chosen.size());
    long long ub = covered + std::min(rem * tile_size, full_cells - covered);
    if (ub <= best_covered) return;

    if (inst.masks[static_cast<std::size_t>(idx)].disjoint(used)) {
      Mask next = used;
      next.merge(inst.masks[static_cast<std::size_t>(idx)]);
      chosen.push_back(idx);
      self(self, idx + 1, next, covered + tile_size);
      chosen.pop_back();
    }
    self(self, idx + 1, used, covered);
  };
  dfs(dfs, 0, Mask(inst.cell_count), 0);

  SearchResult result;
  for (int pi : best) result.placements.push_back(inst.placements[static_cast<std::size_t>(pi)]);
  result.covered_cells = best_covered;
  result.leftover_area = Rational(full_cells - best_covered) + partial_fraction_total(region);
  return result;
}

Partition lift_to_partition(const Polygon& region_poly, const GridRegion& region,
                            const SearchResult& result, const Rational& cell_size,
                            CongruenceMode mode) {
  region.validate();
  if (cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  Polygon reg = normalize(region_poly);
  Rational expected = region.total_area() * cell_size * cell_size;
  if (area(reg) != expected) {
    throw ValidationError("region polygon area does not match the grid discretization");
  }
  Partition part;
  part.region = std::move(reg);
  part.mode = mode;
  part.tiles.reserve(result.placements.size());
  for (const Placement& pl : result.placements) {
    part.tiles.push_back(cells_outline(pl.cells, region.height, cell_size));
  }
  return part;
}

}  // namespace polypart
