#pragma once

#include "polypart/partition.hpp"
#include "polypart/search.hpp"

#include <string>

namespace polypart {

struct RenderSpec {
  std::string output_path;
  double scale = 40.0;  // pixels per unit
  bool show_leftover = true;
};

/// SVG document: region outline, one filled path per tile (fixed 8-color
/// palette cycling by index), leftover hatched when show_leftover.
/// Byte-deterministic for fixed inputs.
std::string render_partition_svg(const Partition& part, const RenderSpec& spec);

/// SVG of a grid search result: region cells, placements colored by index,
/// uncovered and partial cells hatched when show_leftover.
std::string render_search_svg(const GridRegion& region, const SearchResult& result,
                              const RenderSpec& spec);

}  // namespace polypart
