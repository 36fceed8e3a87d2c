#include "polypart/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace polypart {

namespace {

constexpr const char* kPalette[8] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                     "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Frame {
  double minx, maxy, scale, pad;

  double x(double vx) const { return (vx - minx) * scale + pad; }
  double y(double vy) const { return (maxy - vy) * scale + pad; }  // SVG y grows downward
};

std::string path_data(const fp::Polygon& poly, const Frame& f) {
  std::ostringstream d;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d << (i == 0 ? "M" : "L") << fmt(f.x(poly[i].x)) << " " << fmt(f.y(poly[i].y));
  }
  d << "Z";
  return d.str();
}

void open_svg(std::ostringstream& out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\">\n"
      << "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\""
      << " patternTransform=\"rotate(45)\">"
      << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#999999\" stroke-width=\"1.5\"/>"
      << "</pattern></defs>\n";
}

}  // namespace

std::string render_partition_svg(const Partition& part, const RenderSpec& spec) {
  fp::Polygon region = fp::lower(normalize(part.region));
  std::vector<fp::Polygon> tiles;
  tiles.reserve(part.tiles.size());
  for (const auto& t : part.tiles) tiles.push_back(fp::lower(normalize(t)));

  auto box = detail::Box<double>::of(region);
  for (const auto& t : tiles) {
    auto b = detail::Box<double>::of(t);
    box.minx = std::min(box.minx, b.minx);
    box.miny = std::min(box.miny, b.miny);
    box.maxx = std::max(box.maxx, b.maxx);
    box.maxy = std::max(box.maxy, b.maxy);
  }
  const double pad = 10.0;
  Frame f{box.minx, box.maxy, spec.scale, pad};
  const double width = (box.maxx - box.minx) * spec.scale + 2 * pad;
  const double height = (box.maxy - box.miny) * spec.scale + 2 * pad;

  std::ostringstream out;
  open_svg(out, width, height);
  out << "<path d=\"" << path_data(region, f) << "\" fill=\""
      << (spec.show_leftover ? "url(#hatch)" : "#ffffff") << "\" stroke=\"none\"/>\n";
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    out << "<path d=\"" << path_data(tiles[i], f) << "\" fill=\"" << kPalette[i % 8]
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  out << "<path d=\"" << path_data(region, f)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_search_svg(const GridRegion& region, const SearchResult& result,
                              const RenderSpec& spec) {
  region.validate();
  const double pad = 10.0;
  const double width = region.width * spec.scale + 2 * pad;
  const double height = region.height * spec.scale + 2 * pad;

  std::set<Cell> covered;
  for (const auto& pl : result.placements) covered.insert(pl.cells.begin(), pl.cells.end());

  auto rect = [&](std::ostringstream& out, const Cell& c, const std::string& fill,
                  const char* stroke) {
    out << "<rect x=\"" << fmt(c.col * spec.scale + pad) << "\" y=\""
        << fmt(c.row * spec.scale + pad) << "\" width=\"" << fmt(spec.scale) << "\" height=\""
        << fmt(spec.scale) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
  };

  std::ostringstream out;
  open_svg(out, width, height);
  for (const Cell& c : region.cells) {
    if (!covered.count(c)) {
      rect(out, c, spec.show_leftover ? "url(#hatch)" : "#ffffff", "#999999");
    }
  }
  for (const auto& pc : region.partials) {
    rect(out, pc.cell, spec.show_leftover ? "url(#hatch)" : "#ffffff", "#999999");
  }
  for (std::size_t i = 0; i < result.placements.size(); ++i) {
    for (const Cell& c : result.placements[i].cells) {
      rect(out, c, kPalette[i % 8], "#000000");
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polypart
