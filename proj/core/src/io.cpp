#include "polypart/io.hpp"

#include "polypart/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace polypart {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// In grid files '#' is also the full-cell character, so a '#'-led line only
// counts as a comment there when it cannot be a row of cells.
std::vector<Line> tokenize(const std::string& text, bool grid_mode = false) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::string tok;
    Line line{number, {}};
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    if (line.tokens[0][0] == '#') {
      bool cell_row = grid_mode && line.tokens.size() == 1 &&
                      line.tokens[0].find_first_not_of("#.P") == std::string::npos;
      if (!cell_row) continue;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

struct Cursor {
  std::vector<Line> lines;
  std::size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const Line& peek() const {
    if (done()) throw ParseError("unexpected end of input");
    return lines[pos];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos;
    return l;
  }
  void expect_done() const {
    if (!done()) throw ParseError("unexpected trailing content", lines[pos].number);
  }
};

Rational parse_coord(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

long long parse_count(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
}

Polygon parse_polygon_block(Cursor& cur) {
  const Line& head = cur.next();
  if (head.tokens.size() != 2 || head.tokens[0] != "polygon") {
    throw ParseError("expected 'polygon <vertex-count>'", head.number);
  }
  long long v = parse_count(head.tokens[1], head.number);
  if (v < 3) throw ParseError("polygon needs at least 3 vertices", head.number);

  Polygon poly;
  for (long long i = 0; i < v; ++i) {
    if (cur.done()) {
      throw ParseError("expected " + std::to_string(v) + " vertex lines, got " +
                           std::to_string(i),
                       head.number);
    }
    const Line& line = cur.next();
    if (line.tokens.size() != 2) {
      throw ParseError("expected '<x> <y>'", line.number);
    }
    poly.vertices.push_back(Point{parse_coord(line.tokens[0], line.number),
                                  parse_coord(line.tokens[1], line.number)});
  }
  return normalize(poly);
}

}  // namespace

Polygon parse_polygon_file(const std::string& text) {
  Cursor cur{tokenize(text)};
  Polygon poly = parse_polygon_block(cur);
  cur.expect_done();
  return poly;
}

Partition parse_partition_file(const std::string& text, CongruenceMode mode) {
  Cursor cur{tokenize(text)};
  const Line& head = cur.next();
  if (head.tokens.size() != 1 || head.tokens[0] != "partition") {
    throw ParseError("expected 'partition'", head.number);
  }
  Partition part;
  part.mode = mode;
  part.region = parse_polygon_block(cur);

  const Line& tiles_line = cur.next();
  if (tiles_line.tokens.size() != 2 || tiles_line.tokens[0] != "tiles") {
    throw ParseError("expected 'tiles <count>'", tiles_line.number);
  }
  long long n = parse_count(tiles_line.tokens[1], tiles_line.number);
  if (n < 0) throw ParseError("tile count must be nonnegative", tiles_line.number);
  for (long long i = 0; i < n; ++i) part.tiles.push_back(parse_polygon_block(cur));
  cur.expect_done();
  return part;
}

GridRegion parse_grid_file(const std::string& text) {
  Cursor cur{tokenize(text, /*grid_mode=*/true)};
  const Line& head = cur.next();
  if (head.tokens.size() != 3 || head.tokens[0] != "grid") {
    throw ParseError("expected 'grid <width> <height>'", head.number);
  }
  GridRegion region;
  region.width = static_cast<int>(parse_count(head.tokens[1], head.number));
  region.height = static_cast<int>(parse_count(head.tokens[2], head.number));
  if (region.width < 1 || region.height < 1) {
    throw ParseError("grid dimensions must be positive", head.number);
  }

  std::vector<Cell> partial_cells;
  for (int row = 0; row < region.height; ++row) {
    const Line& line = cur.next();
    if (line.tokens.size() != 1 || static_cast<int>(line.tokens[0].size()) != region.width) {
      throw ParseError("expected a row of " + std::to_string(region.width) + " cells",
                       line.number);
    }
    for (int col = 0; col < region.width; ++col) {
      switch (line.tokens[0][static_cast<std::size_t>(col)]) {
        case '#':
          region.cells.push_back(Cell{col, row});
          break;
        case '.':
          break;
        case 'P':
          partial_cells.push_back(Cell{col, row});
          break;
        default:
          throw ParseError("unexpected cell character", line.number);
      }
    }
  }

  for (std::size_t i = 0; i < partial_cells.size(); ++i) {
    const Line& line = cur.next();
    if (line.tokens.size() != 4 || line.tokens[0] != "partial") {
      throw ParseError("expected 'partial <col> <row> <fraction>'", line.number);
    }
    PartialCell pc;
    pc.cell.col = static_cast<int>(parse_count(line.tokens[1], line.number));
    pc.cell.row = static_cast<int>(parse_count(line.tokens[2], line.number));
    pc.fraction = parse_coord(line.tokens[3], line.number);
    if (std::find(partial_cells.begin(), partial_cells.end(), pc.cell) == partial_cells.end()) {
      throw ParseError("partial declaration does not match a 'P' cell", line.number);
    }
    if (!(pc.fraction > 0 && pc.fraction < 1)) {
      throw ParseError("partial fraction must lie strictly between 0 and 1", line.number);
    }
    region.partials.push_back(std::move(pc));
  }
  cur.expect_done();
  if (region.partials.size() != partial_cells.size()) {
    throw ParseError("every 'P' cell needs a 'partial' line");
  }
  region.validate();
  return region;
}

GridTile parse_grid_tile_file(const std::string& text) {
  GridRegion region = parse_grid_file(text);
  if (!region.partials.empty()) {
    throw ParseError("a tile grid cannot contain partial cells");
  }
  return GridTile::from_cells(region.cells);
}

std::string write_polygon(const Polygon& poly) {
  std::ostringstream out;
  out << "polygon " << poly.size() << "\n";
  for (const auto& p : poly.vertices) {
    out << to_string(p.x) << " " << to_string(p.y) << "\n";
  }
  return out.str();
}

std::string write_partition(const Partition& part) {
  std::ostringstream out;
  out << "partition\n" << write_polygon(part.region);
  out << "tiles " << part.tiles.size() << "\n";
  for (const auto& t : part.tiles) out << write_polygon(t);
  return out.str();
}

std::string write_tile_sets(const TileSetPartition& tsp) {
  std::ostringstream out;
  std::size_t total = 0;
  for (const auto& set : tsp.sets) total += set.size();
  out << "partition\n" << write_polygon(tsp.region);
  out << "tiles " << total << "\n";
  for (std::size_t s = 0; s < tsp.sets.size(); ++s) {
    out << "# set " << s << "\n";
    for (const auto& piece : tsp.sets[s]) out << write_polygon(piece);
  }
  return out.str();
}

std::string write_grid(const GridRegion& region) {
  std::ostringstream out;
  out << "grid " << region.width << " " << region.height << "\n";
  std::set<Cell> full(region.cells.begin(), region.cells.end());
  std::set<Cell> partial;
  for (const auto& pc : region.partials) partial.insert(pc.cell);
  for (int row = 0; row < region.height; ++row) {
    for (int col = 0; col < region.width; ++col) {
      Cell c{col, row};
      out << (full.count(c) ? '#' : partial.count(c) ? 'P' : '.');
    }
    out << "\n";
  }
  for (const auto& pc : region.partials) {
    out << "partial " << pc.cell.col << " " << pc.cell.row << " " << to_string(pc.fraction)
        << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace polypart
