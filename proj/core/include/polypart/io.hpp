#pragma once

#include "polypart/constructions.hpp"
#include "polypart/grid.hpp"
#include "polypart/partition.hpp"

#include <string>

namespace polypart {

// Text formats. Tokens are whitespace-separated; lines whose first non-blank
// character is '#' are comments. Coordinates are decimal integers or "a/b"
// rationals.
//
//   polygon file:    "polygon <v>" then v lines "<x> <y>"
//   partition file:  "partition", a polygon block (the region),
//                    "tiles <n>", then n polygon blocks
//   grid file:       "grid <w> <h>", h rows of '#' (full), '.' (outside),
//                    'P' (partial), then one "partial <col> <row> <a>/<b>"
//                    line per P cell

/// Parses a single polygon file; the result is validated and normalized.
/// Parse errors carry 1-based line numbers.
Polygon parse_polygon_file(const std::string& text);

Partition parse_partition_file(const std::string& text, CongruenceMode mode = {});

GridRegion parse_grid_file(const std::string& text);

/// Grid file without partial cells, read as a tile (normalized, connected).
GridTile parse_grid_tile_file(const std::string& text);

std::string write_polygon(const Polygon& poly);
std::string write_partition(const Partition& part);

/// Tile-set partitions are written in the flat partition format with one
/// comment label per set, so they parse back as ordinary partitions.
std::string write_tile_sets(const TileSetPartition& tsp);

std::string write_grid(const GridRegion& region);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace polypart
