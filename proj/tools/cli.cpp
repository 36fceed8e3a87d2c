#include "cli.hpp"

#include "polypart/bounds.hpp"
#include "polypart/constructions.hpp"
#include "polypart/io.hpp"
#include "polypart/search.hpp"
#include "polypart/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace polypart::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* tf(bool b) { return b ? "true" : "false"; }

struct CommonFlags {
  bool no_reflection = false;
  double approx_eps = 0.0;  // 0 means exact mode

  CongruenceMode mode() const { return CongruenceMode{!no_reflection}; }
  bool approx() const { return approx_eps > 0.0; }
};

void emit_construct_output(const std::string& text, const std::string& out_path,
                           std::ostream& out) {
  if (out_path.empty()) {
    out << text;  // pure partition text, pipeable
  } else {
    write_text_file(out_path, text);
    out << "wrote " << out_path << "\n---\nwrote=" << out_path << "\n";
  }
}

template <class S>
void print_report(const BasicReport<S>& rep, Rational region_area, std::size_t tiles,
                  const std::function<std::string(const S&)>& num, std::ostream& out) {
  out << "region area: " << to_string(region_area) << "\n";
  out << "tiles: " << tiles << "\n";
  out << "mutually congruent: " << yn(rep.mutually_congruent) << "\n";
  out << "all contained: " << yn(rep.all_contained) << "\n";
  out << "overlap area: " << num(rep.overlap_area) << "\n";
  out << "leftover area: " << num(rep.leftover_area) << "\n";
  out << "leftover fraction: " << num(rep.leftover_fraction) << "\n";
  out << "tiles convex: " << yn(rep.tiles_convex) << "\n";
  out << (rep.perfect ? "perfect congruent partition\n"
                      : (rep.valid ? "valid congruent partition with leftover\n"
                                   : "not a valid congruent partition\n"));
  out << "---\n";
  out << "congruent=" << tf(rep.mutually_congruent) << "\n";
  out << "contained=" << tf(rep.all_contained) << "\n";
  out << "overlap=" << num(rep.overlap_area) << "\n";
  out << "leftover=" << num(rep.leftover_area) << "\n";
  out << "fraction=" << num(rep.leftover_fraction) << "\n";
  out << "perfect=" << tf(rep.perfect) << "\n";
  out << "convex_tiles=" << tf(rep.tiles_convex) << "\n";
  out << "valid=" << tf(rep.valid) << "\n";
}

void print_stats(const LayoutStats& st, std::ostream& out) {
  out << "p=" << st.p << " n=" << st.n << " k=" << st.k << " r=" << st.r << " m=" << st.m
      << " edge-to-edge: " << yn(st.edge_to_edge) << "\n";
  out << "---\n";
  out << "p=" << st.p << "\nn=" << st.n << "\nk=" << st.k << "\nr=" << st.r << "\nm=" << st.m
      << "\nedge_to_edge=" << tf(st.edge_to_edge) << "\n";
}

std::string placements_kv(const SearchResult& res) {
  std::ostringstream s;
  for (std::size_t i = 0; i < res.placements.size(); ++i) {
    const Placement& pl = res.placements[i];
    if (i > 0) s << "|";
    s << pl.sym << ":" << pl.offset.col << ":" << pl.offset.row;
  }
  return s.str();
}

void print_search_result(const SearchResult& res, bool found, std::ostream& out) {
  out << (found ? "tiling found\n" : "no tiling\n");
  for (std::size_t i = 0; i < res.placements.size(); ++i) {
    const Placement& pl = res.placements[i];
    out << "placement " << i << ": sym=" << pl.sym << " offset=" << pl.offset.col << ","
        << pl.offset.row << " cells=";
    for (std::size_t c = 0; c < pl.cells.size(); ++c) {
      out << (c ? ";" : "") << pl.cells[c].col << "," << pl.cells[c].row;
    }
    out << "\n";
  }
  out << "covered cells: " << res.covered_cells << "\n";
  out << "leftover area: " << to_string(res.leftover_area) << "\n";
  out << "---\n";
  out << "found=" << tf(found) << "\n";
  out << "covered=" << res.covered_cells << "\n";
  out << "leftover=" << to_string(res.leftover_area) << "\n";
  out << "placements=" << placements_kv(res) << "\n";
}

// Lift/render side outputs shared by the search subcommands.
struct SearchOutputs {
  std::string lift_region_path;
  std::string cell_size_text = "1";
  std::string out_partition_path;
  std::string render_path;
  double render_scale = 40.0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--lift", lift_region_path,
                    "region polygon file; lift the result to an exact partition");
    cmd->add_option("--cell-size", cell_size_text, "cell edge length for --lift (rational)");
    cmd->add_option("-o,--out", out_partition_path, "write the lifted partition to this file");
    cmd->add_option("--render", render_path, "write an SVG of the grid result to this file");
    cmd->add_option("--render-scale", render_scale, "pixels per cell for --render");
  }

  void emit(const GridRegion& region, const SearchResult& res, CongruenceMode mode,
            std::ostream& out) const {
    if (!render_path.empty()) {
      RenderSpec spec;
      spec.output_path = render_path;
      spec.scale = render_scale;
      write_text_file(render_path, render_search_svg(region, res, spec));
      out << "rendered " << render_path << "\n";
    }
    if (!lift_region_path.empty()) {
      Polygon region_poly = parse_polygon_file(read_text_file(lift_region_path));
      Rational cell = parse_rational(cell_size_text);
      Partition part = lift_to_partition(region_poly, region, res, cell, mode);
      std::string text = write_partition(part);
      if (out_partition_path.empty()) {
        out << text;
      } else {
        write_text_file(out_partition_path, text);
        out << "wrote " << out_partition_path << "\n";
      }
    }
  }
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"congruent-partition toolkit: verify, construct, bound and search "
               "partitions of polygons into mutually congruent tiles"};
  app.require_subcommand(1);
  int exit_code = kYes;

  // --- verify ---------------------------------------------------------------
  auto common_verify = std::make_shared<CommonFlags>();
  auto verify_file = std::make_shared<std::string>();
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a partition file");
  cmd_verify->add_option("partition-file", *verify_file)->required();
  cmd_verify->add_flag("--no-reflection", common_verify->no_reflection,
                       "congruence by translation and rotation only");
  cmd_verify->add_option("--approx", common_verify->approx_eps,
                         "verify in floating point with this tolerance");
  cmd_verify->callback([&, common_verify, verify_file]() {
    Partition part =
        parse_partition_file(read_text_file(*verify_file), common_verify->mode());
    Rational region_area = area(normalize(part.region));
    if (common_verify->approx()) {
      auto rep = verify_approx(part, common_verify->approx_eps);
      print_report<double>(rep, region_area, part.tiles.size(),
                           [](const double& v) { return fmt_double(v); }, out);
      exit_code = rep.valid ? kYes : kNo;
    } else {
      auto rep = verify(part);
      print_report<Rational>(rep, region_area, part.tiles.size(),
                             [](const Rational& v) { return to_string(v); }, out);
      exit_code = rep.valid ? kYes : kNo;
    }
  });

  // --- stats ----------------------------------------------------------------
  auto common_stats = std::make_shared<CommonFlags>();
  auto stats_file = std::make_shared<std::string>();
  CLI::App* cmd_stats = app.add_subcommand("stats", "layout statistics of a perfect partition");
  cmd_stats->add_option("partition-file", *stats_file)->required();
  cmd_stats->add_flag("--no-reflection", common_stats->no_reflection,
                      "congruence by translation and rotation only");
  cmd_stats->add_option("--approx", common_stats->approx_eps,
                        "compute in floating point with this tolerance");
  cmd_stats->callback([&, common_stats, stats_file]() {
    Partition part = parse_partition_file(read_text_file(*stats_file), common_stats->mode());
    LayoutStats st = common_stats->approx()
                         ? layout_stats_approx(part, common_stats->approx_eps)
                         : layout_stats(part);
    print_stats(st, out);
  });

  // --- congruent --------------------------------------------------------.---
  auto congruent_flags = std::make_shared<CommonFlags>();
  auto poly_a = std::make_shared<std::string>();
  auto poly_b = std::make_shared<std::string>();
  CLI::App* cmd_congruent = app.add_subcommand("congruent", "decide congruence of two polygons");
  cmd_congruent->add_option("polyA-file", *poly_a)->required();
  cmd_congruent->add_option("polyB-file", *poly_b)->required();
  cmd_congruent->add_flag("--no-reflection", congruent_flags->no_reflection,
                          "congruence by translation and rotation only");
  cmd_congruent->callback([&, congruent_flags, poly_a, poly_b]() {
    Polygon a = parse_polygon_file(read_text_file(*poly_a));
    Polygon b = parse_polygon_file(read_text_file(*poly_b));
    bool c = congruent(a, b, congruent_flags->mode());
    out << (c ? "congruent" : "not congruent")
        << (congruent_flags->no_reflection ? " (reflection-free mode)" : "") << "\n";
    out << "---\ncongruent=" << tf(c) << "\n";
    exit_code = c ? kYes : kNo;
  });

  // --- construct --------------------------------------------------------.---
  CLI::App* cmd_construct = app.add_subcommand("construct", "emit the built-in constructions");
  cmd_construct->require_subcommand(1);

  auto quarter_in = std::make_shared<std::string>();
  auto quarter_out = std::make_shared<std::string>();
  CLI::App* cmd_quarter =
      cmd_construct->add_subcommand("quarter", "cut a triangle into 4 congruent triangles");
  cmd_quarter->add_option("poly-file", *quarter_in)->required();
  cmd_quarter->add_option("-o,--out", *quarter_out, "output partition file");
  cmd_quarter->callback([&, quarter_in, quarter_out]() {
    Partition part = quarter_triangle(parse_polygon_file(read_text_file(*quarter_in)));
    emit_construct_output(write_partition(part), *quarter_out, out);
  });

  auto sets_in = std::make_shared<std::string>();
  auto sets_out = std::make_shared<std::string>();
  auto sets_s = std::make_shared<int>(2);
  CLI::App* cmd_sets = cmd_construct->add_subcommand(
      "sets", "partition any polygon into s^2 identical tile-sets");
  cmd_sets->add_option("--s", *sets_s, "subdivision order (N = s^2)")->required();
  cmd_sets->add_option("poly-file", *sets_in)->required();
  cmd_sets->add_option("-o,--out", *sets_out, "output partition file");
  cmd_sets->callback([&, sets_in, sets_out, sets_s]() {
    TileSetPartition tsp = square_tile_sets(parse_polygon_file(read_text_file(*sets_in)), *sets_s);
    emit_construct_output(write_tile_sets(tsp), *sets_out, out);
  });

  auto strips_in = std::make_shared<std::string>();
  auto strips_out = std::make_shared<std::string>();
  auto strips_n = std::make_shared<int>(2);
  CLI::App* cmd_strips =
      cmd_construct->add_subcommand("strips", "cut a rectangle into n vertical strips");
  cmd_strips->add_option("--n", *strips_n, "strip count")->required();
  cmd_strips->add_option("poly-file", *strips_in)->required();
  cmd_strips->add_option("-o,--out", *strips_out, "output partition file");
  cmd_strips->callback([&, strips_in, strips_out, strips_n]() {
    Partition part = strips(parse_polygon_file(read_text_file(*strips_in)), *strips_n);
    emit_construct_output(write_partition(part), *strips_out, out);
  });

  auto eq3_out = std::make_shared<std::string>();
  CLI::App* cmd_eq3 = cmd_construct->add_subcommand(
      "eq3", "equilateral triangle into 3 congruent quadrilaterals (approximate coordinates)");
  cmd_eq3->add_option("-o,--out", *eq3_out, "output partition file");
  cmd_eq3->callback([&, eq3_out]() {
    emit_construct_output(write_partition(equilateral_three_quads()), *eq3_out, out);
  });

  // --- bounds ---------------------------------------------------------------
  CLI::App* cmd_bounds = app.add_subcommand("bounds", "tile-complexity counting relations");
  cmd_bounds->require_subcommand(1);

  auto ck = std::make_shared<LayoutStats>();
  CLI::App* cmd_check = cmd_bounds->add_subcommand("check", "evaluate relations (1)-(3)");
  cmd_check->add_option("--p", ck->p, "vertices of the region")->required();
  cmd_check->add_option("--n", ck->n, "tile count")->required();
  cmd_check->add_option("--k", ck->k, "vertices per tile")->required();
  cmd_check->add_option("--r", ck->r, "boundary layout vertices")->required();
  cmd_check->add_option("--m", ck->m, "interior layout vertices")->required();
  cmd_check->callback([&, ck]() {
    RelationReport rep = check_relations(*ck);
    out << "(1) nk >= 3m+2r+p: " << yn(rep.ineq1_holds) << "\n";
    out << "(2) n(k-2) = 2m+r+p-2: " << yn(rep.eq2_holds) << "\n";
    out << "(3) (6-k)n >= r-p+6: " << yn(rep.ineq3_holds) << "\n";
    out << "alpha = k - p = " << rep.alpha << "\n";
    out << "---\n";
    out << "ineq1=" << tf(rep.ineq1_holds) << "\neq2=" << tf(rep.eq2_holds)
        << "\nineq3=" << tf(rep.ineq3_holds) << "\nalpha=" << rep.alpha << "\n";
    exit_code = (rep.ineq1_holds && rep.eq2_holds && rep.ineq3_holds) ? kYes : kNo;
  });

  auto en_maxp = std::make_shared<long long>(10);
  auto en_maxn = std::make_shared<long long>(20);
  auto en_maxr = std::make_shared<long long>(20);
  auto en_minalpha = std::make_shared<long long>(1);
  CLI::App* cmd_enum = cmd_bounds->add_subcommand(
      "enumerate", "exhaust tuples admitted by relations (1)-(2) with k > p");
  cmd_enum->add_option("--max-p", *en_maxp)->required();
  cmd_enum->add_option("--max-n", *en_maxn)->required();
  cmd_enum->add_option("--max-r", *en_maxr)->required();
  cmd_enum->add_option("--min-alpha", *en_minalpha, "smallest k - p to consider");
  cmd_enum->callback([&, en_maxp, en_maxn, en_maxr, en_minalpha]() {
    auto tuples = enumerate_feasible(*en_maxp, *en_maxn, *en_maxr, *en_minalpha);
    long long max_p = 0, max_k = 0;
    out << "p n k r m\n";
    for (const auto& t : tuples) {
      out << t.p << " " << t.n << " " << t.k << " " << t.r << " " << t.m << "\n";
      max_p = std::max(max_p, t.p);
      max_k = std::max(max_k, t.k);
    }
    out << "feasible tuples: " << tuples.size() << ", max p: " << max_p << ", max k: " << max_k
        << "\n";
    out << "---\n";
    out << "count=" << tuples.size() << "\nmax_p=" << max_p << "\nmax_k=" << max_k << "\n";
  });

  // --- search ---------------------------------------------------------------
  CLI::App* cmd_search = app.add_subcommand("search", "grid tiling search");
  cmd_search->require_subcommand(1);

  auto tile_flags = std::make_shared<CommonFlags>();
  auto tile_region = std::make_shared<std::string>();
  auto tile_tile = std::make_shared<std::string>();
  auto tile_n = std::make_shared<int>(1);
  auto tile_best = std::make_shared<bool>(false);
  auto tile_outputs = std::make_shared<SearchOutputs>();
  CLI::App* cmd_tile =
      cmd_search->add_subcommand("tile", "tile a grid region with copies of one tile");
  cmd_tile->add_option("--region", *tile_region, "grid region file")->required();
  cmd_tile->add_option("--tile", *tile_tile, "grid tile file")->required();
  cmd_tile->add_option("--n", *tile_n, "number of copies")->required();
  cmd_tile->add_flag("--no-reflection", tile_flags->no_reflection,
                     "rotations only, no mirror images");
  cmd_tile->add_flag("--best-partial", *tile_best,
                     "maximize covered cells instead of deciding a perfect tiling");
  tile_outputs->add_options(cmd_tile);
  cmd_tile->callback([&, tile_flags, tile_region, tile_tile, tile_n, tile_best, tile_outputs]() {
    GridRegion region = parse_grid_file(read_text_file(*tile_region));
    GridTile tile = parse_grid_tile_file(read_text_file(*tile_tile));
    CongruenceMode mode = tile_flags->mode();
    if (*tile_best) {
      SearchResult res = best_partial(region, tile, *tile_n, mode);
      print_search_result(res, true, out);
      tile_outputs->emit(region, res, mode, out);
    } else {
      auto res = perfect_tiling(region, tile, *tile_n, mode);
      if (res) {
        print_search_result(*res, true, out);
        tile_outputs->emit(region, *res, mode, out);
      } else {
        SearchResult empty;
        empty.leftover_area = region.total_area();
        print_search_result(empty, false, out);
        exit_code = kNo;
      }
    }
  });

  auto auto_flags = std::make_shared<CommonFlags>();
  auto auto_region = std::make_shared<std::string>();
  auto auto_n = std::make_shared<int>(1);
  auto auto_outputs = std::make_shared<SearchOutputs>();
  CLI::App* cmd_auto = cmd_search->add_subcommand(
      "auto", "try every candidate tile of size floor(cells/N)");
  cmd_auto->add_option("--region", *auto_region, "grid region file")->required();
  cmd_auto->add_option("--n", *auto_n, "number of copies")->required();
  cmd_auto->add_flag("--no-reflection", auto_flags->no_reflection,
                     "rotations only, no mirror images");
  auto_outputs->add_options(cmd_auto);
  cmd_auto->callback([&, auto_flags, auto_region, auto_n, auto_outputs]() {
    GridRegion region = parse_grid_file(read_text_file(*auto_region));
    if (*auto_n < 1) throw std::invalid_argument("N must be positive");
    const std::size_t cells = region.cells.size();
    const int tile_size = static_cast<int>(cells) / *auto_n;
    if (tile_size < 1) throw std::invalid_argument("region too small for N tiles");
    CongruenceMode mode = auto_flags->mode();
    std::vector<GridTile> candidates = enumerate_tiles(tile_size, mode);
    out << "candidate tiles of " << tile_size << " cells: " << candidates.size() << "\n";

    const bool divisible = cells % static_cast<std::size_t>(*auto_n) == 0;
    std::optional<SearchResult> best_res;
    std::optional<GridTile> best_tile;
    std::size_t tried = 0;
    for (const GridTile& cand : candidates) {
      ++tried;
      if (divisible) {
        auto res = perfect_tiling(region, cand, *auto_n, mode);
        if (res) {
          best_res = std::move(res);
          best_tile = cand;
          break;
        }
      } else {
        SearchResult res = best_partial(region, cand, *auto_n, mode);
        if (!best_res || res.covered_cells > best_res->covered_cells) {
          best_res = std::move(res);
          best_tile = cand;
        }
      }
    }
    out << "tiles tried: " << tried << "\n";
    if (best_res && best_tile) {
      out << "tile cells:";
      for (const Cell& c : best_tile->cells) out << " " << c.col << "," << c.row;
      out << "\n";
      print_search_result(*best_res, divisible || best_res->covered_cells > 0, out);
      auto_outputs->emit(region, *best_res, mode, out);
    } else {
      SearchResult empty;
      empty.leftover_area = region.total_area();
      print_search_result(empty, false, out);
      exit_code = kNo;
    }
  });

  // --- render -----------------------------------------------------------.---
  auto render_in = std::make_shared<std::string>();
  auto render_spec = std::make_shared<RenderSpec>();
  auto render_no_hatch = std::make_shared<bool>(false);
  CLI::App* cmd_render = app.add_subcommand("render", "render a partition file as SVG");
  cmd_render->add_option("partition-file", *render_in)->required();
  cmd_render->add_option("-o,--out", render_spec->output_path, "output SVG file")->required();
  cmd_render->add_option("--scale", render_spec->scale, "pixels per unit");
  cmd_render->add_flag("--no-hatch", *render_no_hatch, "do not hatch leftover area");
  cmd_render->callback([&, render_in, render_spec, render_no_hatch]() {
    render_spec->show_leftover = !*render_no_hatch;
    Partition part = parse_partition_file(read_text_file(*render_in));
    write_text_file(render_spec->output_path, render_partition_svg(part, *render_spec));
    out << "rendered " << render_spec->output_path << "\n";
  });

  // --- dispatch ---------------------------------------------------------.---
  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return exit_code;
}

}  // namespace polypart::cli
