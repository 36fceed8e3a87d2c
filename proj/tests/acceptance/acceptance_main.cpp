// Acceptance suite: one check per shipped claim, each printed as a single
// pass/fail line. Exact quantities are asserted with zero tolerance; the two
// timed searches assert their wall-clock budgets.

#include "polypart/bounds.hpp"
#include "polypart/constructions.hpp"
#include "polypart/io.hpp"
#include "polypart/search.hpp"

#include "cli.hpp"

#include "../support/generators.hpp"
#include "../support/polyomino_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace polypart;
using testsupport::Rng;

namespace {

int g_failed_criteria = 0;

struct CriterionContext {
  std::string note;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

void criterion(const std::string& name, const std::function<void(CriterionContext&)>& body) {
  CriterionContext ctx;
  auto start = std::chrono::steady_clock::now();
  try {
    body(ctx);
  } catch (const std::exception& e) {
    ctx.failures.push_back(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
  if (ctx.failures.empty()) {
    std::cout << "[PASS] " << name << " (" << timing << ")"
              << (ctx.note.empty() ? "" : ": " + ctx.note) << "\n";
  } else {
    ++g_failed_criteria;
    std::cout << "[FAIL] " << name << " (" << timing << ")"
              << (ctx.note.empty() ? "" : ": " + ctx.note) << "\n";
    for (const auto& f : ctx.failures) std::cout << "       - " << f << "\n";
  }
}

std::string data_file(const std::string& name) {
  return std::string(POLYPART_DATA_DIR) + "/" + name;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str()};
}

bool has_kv(const std::string& out, const std::string& kv) {
  auto sep = out.find("\n---\n");
  return sep != std::string::npos && out.find("\n" + kv + "\n", sep) != std::string::npos;
}

constexpr CongruenceMode kFree{true};
constexpr CongruenceMode kNoReflection{false};

// --- criterion 1 ------------------------------------------------------------

void friedman_reproduction(CriterionContext& ctx) {
  auto start = std::chrono::steady_clock::now();

  GridRegion region = parse_grid_file(read_text_file(data_file("friedman.grid")));
  GridTile tile = parse_grid_tile_file(read_text_file(data_file("l_tetromino.grid")));
  Polygon region_poly = parse_polygon_file(read_text_file(data_file("friedman.poly")));

  auto tiling = perfect_tiling(region, tile, 5, kFree);
  ctx.require(tiling.has_value(), "perfect_tiling found no 5-L-tetromino cover");

  SearchResult best = best_partial(region, tile, 5, kFree);
  ctx.require(best.covered_cells == 20, "best_partial covered != 20");
  ctx.require(best.leftover_area == Rational(1, 2), "best_partial leftover != 1/2");

  if (tiling) {
    Partition part = lift_to_partition(region_poly, region, *tiling, Rational(1), kFree);
    VerificationReport rep = verify(part);
    ctx.require(rep.mutually_congruent && rep.all_contained && rep.overlap_area == 0,
                "lifted partition is not a valid congruent partition");
    ctx.require(area(normalize(region_poly)) == Rational(41, 2), "region area != 41/2");
    ctx.require(rep.leftover_area == Rational(1, 2), "lifted leftover != 1/2");
    ctx.require(rep.leftover_fraction == Rational(1, 41), "lifted fraction != 1/41");
  }

  // the same pipeline through the command-line front end
  auto tmp = std::filesystem::temp_directory_path() / "polypart_acceptance";
  std::filesystem::create_directories(tmp);
  std::string lifted = (tmp / "friedman.partition").string();
  CliResult search = run_cli({"search", "tile", "--region", data_file("friedman.grid"),
                              "--tile", data_file("l_tetromino.grid"), "--n", "5", "--lift",
                              data_file("friedman.poly"), "-o", lifted});
  ctx.require(search.code == 0 && has_kv(search.out, "covered=20") &&
                  has_kv(search.out, "leftover=1/2"),
              "search tile CLI did not report covered=20 leftover=1/2");
  CliResult verify_cli = run_cli({"verify", lifted});
  ctx.require(verify_cli.code == 0 && has_kv(verify_cli.out, "leftover=1/2") &&
                  has_kv(verify_cli.out, "fraction=1/41"),
              "verify CLI did not report leftover=1/2 fraction=1/41");

  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.require(seconds < 10.0, "runtime exceeded 10 seconds");
  ctx.note = "covered=20 leftover=1/2 fraction=1/41 of 41/2";
}

// --- criterion 2 ------------------------------------------------------------

void counting_bound_exhaustion(CriterionContext& ctx) {
  auto start = std::chrono::steady_clock::now();

  auto tuples = enumerate_feasible(20, 200, 200, 1);
  ctx.require(!tuples.empty(), "no feasible tuples at all");
  long long max_p = 0, max_k = 0;
  for (const auto& t : tuples) {
    max_p = std::max(max_p, t.p);
    max_k = std::max(max_k, t.k);
  }
  // Exhaustion confirms the bound "p <= 10 for any value of n". The relations
  // are in fact stricter: the observed maximum is 4 (printed in the note).
  ctx.require(max_p <= 10, "a feasible tuple exceeds p = 10");

  auto strict = enumerate_feasible(20, 200, 200, 2);
  long long max_p2 = 0, max_k2 = 0;
  for (const auto& t : strict) {
    max_p2 = std::max(max_p2, t.p);
    max_k2 = std::max(max_k2, t.k);
  }
  ctx.require(max_p2 <= 8, "alpha >= 2: a feasible tuple exceeds p = 8");
  ctx.require(max_k2 <= 10, "alpha >= 2: a feasible tuple exceeds k = 10");

  // the same exhaustion through the command-line front end
  CliResult en = run_cli({"bounds", "enumerate", "--max-p", "20", "--max-n", "200", "--max-r",
                          "200"});
  ctx.require(en.code == 0 && has_kv(en.out, "max_p=" + std::to_string(max_p)),
              "bounds enumerate CLI disagrees with the library maximum");

  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.require(seconds < 60.0, "runtime exceeded 60 seconds");

  std::ostringstream note;
  note << "alpha>=1: " << tuples.size() << " tuples, max p=" << max_p << " k=" << max_k
       << " (bound p<=10 confirmed); alpha>=2: max p=" << max_p2 << " k=" << max_k2
       << " (bounds p<=8, k<=10 confirmed)";
  ctx.note = note.str();
}

// --- criterion 3 ------------------------------------------------------------

void equilateral_fixture(CriterionContext& ctx) {
  Partition part = equilateral_three_quads();
  ApproxVerificationReport rep = verify_approx(part, 1e-9);
  ctx.require(rep.perfect, "equilateral construction does not verify perfect");

  LayoutStats st = layout_stats_approx(part, 1e-9);
  ctx.require(st == LayoutStats{3, 3, 4, 3, 1, true}, "stats != (p=3,n=3,k=4,r=3,m=1)");

  RelationReport rel = check_relations(st);
  ctx.require(rel.ineq1_holds && st.n * st.k == 12 && 3 * st.m + 2 * st.r + st.p == 12,
              "relation (1) instantiation is not 12 >= 12");
  ctx.require(rel.eq2_holds && st.n * (st.k - 2) == 6 && 2 * st.m + st.r + st.p - 2 == 6,
              "relation (2) instantiation is not 6 = 6");
  ctx.require(rel.ineq3_holds && (6 - st.k) * st.n == 6 && st.r - st.p + 6 == 6,
              "relation (3) instantiation is not 6 >= 6");
  ctx.note = "p=3 n=3 k=4 r=3 m=1; 12>=12, 6=6, 6>=6";
}

// --- criterion 4 ------------------------------------------------------------

void construction_properties(CriterionContext& ctx) {
  Rng rng(0x5eed0001);
  for (int trial = 0; trial < 200 && ctx.failures.size() < 5; ++trial) {
    Polygon tri = testsupport::random_triangle(rng);
    Partition q = quarter_triangle(tri);
    VerificationReport rep = verify(q);  // reflection-free mode set by the construction
    ctx.require(rep.perfect && rep.mutually_congruent,
                "quarter_triangle not perfect+congruent at trial " + std::to_string(trial));
  }

  Rng rng2(0x5eed0002);
  for (int trial = 0; trial < 200 && ctx.failures.size() < 5; ++trial) {
    Polygon tri = testsupport::random_triangle(rng2);
    int s = 1 + trial % 4;
    Partition part{tri, subdivide_triangle(tri, s), kNoReflection};
    bool count_ok = part.tiles.size() == static_cast<std::size_t>(s) * s;
    VerificationReport rep = verify(part);
    ctx.require(count_ok && rep.perfect && rep.mutually_congruent,
                "subdivide_triangle(s=" + std::to_string(s) + ") failed at trial " +
                    std::to_string(trial));
  }

  Rng rng3(0x5eed0003);
  for (int trial = 0; trial < 200 && ctx.failures.size() < 5; ++trial) {
    int m_target = 3 + trial % 6;  // up to 8 vertices
    int s = 1 + trial % 3;
    Polygon poly = testsupport::random_simple_polygon(rng3, m_target);
    const std::size_t m = poly.size();
    TileSetPartition tsp = square_tile_sets(poly, s);

    bool shape_ok = tsp.sets.size() == static_cast<std::size_t>(s) * s;
    for (const auto& set : tsp.sets) shape_ok = shape_ok && set.size() == m - 2;
    ctx.require(shape_ok, "tile-set shape wrong at trial " + std::to_string(trial));

    bool congruence_ok = true;
    for (std::size_t j = 0; j < m - 2 && congruence_ok; ++j) {
      for (std::size_t si = 1; si < tsp.sets.size(); ++si) {
        if (!congruent(tsp.sets[0][j], tsp.sets[si][j], kNoReflection)) {
          congruence_ok = false;
          break;
        }
      }
    }
    ctx.require(congruence_ok, "per-index congruence failed at trial " + std::to_string(trial));

    Partition flat;
    flat.region = poly;
    for (const auto& set : tsp.sets) {
      flat.tiles.insert(flat.tiles.end(), set.begin(), set.end());
    }
    VerificationReport cover = verify(flat);
    ctx.require(cover.all_contained && cover.overlap_area == 0 && cover.leftover_area == 0,
                "tile-set coverage not exact at trial " + std::to_string(trial));
  }
  ctx.note = "200 trials each: quartering, subdivision s<=4, tile-sets m<=8 s<=3; all exact";
}

// --- criterion 5 ------------------------------------------------------------

void relation_cross_check(CriterionContext& ctx) {
  int checked = 0;
  auto expect_relations = [&](const Partition& part, const std::string& what) {
    LayoutStats st = layout_stats(part);
    RelationReport rel = check_relations(st);
    ctx.require(st.edge_to_edge, what + ": layout unexpectedly has a T-junction");
    ctx.require(rel.ineq1_holds, what + ": relation (1) fails");
    ctx.require(rel.eq2_holds, what + ": relation (2) fails");
    ++checked;
  };

  Polygon square = parse_polygon_file("polygon 4\n0 0\n1 0\n1 1\n0 1\n");
  Polygon wide = parse_polygon_file("polygon 4\n-2 1\n5 1\n5 3\n-2 3\n");
  for (int n = 1; n <= 10; ++n) {
    expect_relations(strips(square, n), "strips(square," + std::to_string(n) + ")");
    expect_relations(strips(wide, n), "strips(wide," + std::to_string(n) + ")");
  }
  expect_relations(quarter_triangle(parse_polygon_file("polygon 3\n0 0\n2 0\n0 2\n")),
                   "quarter(right)");
  expect_relations(quarter_triangle(parse_polygon_file("polygon 3\n0 0\n4 0\n1 3\n")),
                   "quarter(scalene)");

  // three dominoes with a T-junction: flagged, and relation (2) fails 6 != 7
  Partition tj;
  tj.region = parse_polygon_file("polygon 4\n0 0\n3 0\n3 2\n0 2\n");
  tj.tiles = {parse_polygon_file("polygon 4\n0 0\n1 0\n1 2\n0 2\n"),
              parse_polygon_file("polygon 4\n1 0\n3 0\n3 1\n1 1\n"),
              parse_polygon_file("polygon 4\n1 1\n3 1\n3 2\n1 2\n")};
  LayoutStats st = layout_stats(tj);
  RelationReport rel = check_relations(st);
  ctx.require(!st.edge_to_edge, "T-junction layout not flagged");
  ctx.require(!rel.eq2_holds, "relation (2) unexpectedly holds on the T-junction layout");
  ctx.require(st.n * (st.k - 2) == 6 && 2 * st.m + st.r + st.p - 2 == 7,
              "T-junction relation (2) sides are not 6 and 7");

  std::ostringstream note;
  note << checked << " edge-to-edge layouts satisfy (1) and (2); T-junction flagged with 6 != 7";
  ctx.note = note.str();
}

// --- criterion 6 ------------------------------------------------------------

void congruence_properties(CriterionContext& ctx) {
  Rng rng(0xc0ffee);
  int trials = 0;

  // invariance under rigid motions, both modes (200 trials)
  for (int t = 0; t < 200 && ctx.failures.size() < 5; ++t, ++trials) {
    Polygon poly = testsupport::random_simple_polygon(rng, 3 + t % 6);
    RigidMotion direct = testsupport::random_motion(rng, false);
    RigidMotion mirror = testsupport::random_motion(rng, false);
    mirror.reflect = true;
    bool ok = congruent(poly, apply_motion(poly, direct), kNoReflection) &&
              congruent(poly, apply_motion(poly, direct), kFree) &&
              congruent(poly, apply_motion(poly, mirror), kFree);
    ctx.require(ok, "motion invariance failed at trial " + std::to_string(t));
  }

  // a nonzero rational perturbation of one vertex breaks congruence (150)
  int done = 0;
  while (done < 150 && ctx.failures.size() < 5) {
    Polygon poly = testsupport::random_simple_polygon(rng, 4 + done % 4);
    Polygon bent = poly;
    Rational dx = testsupport::random_rational(rng, 3, 7);
    Rational dy = testsupport::random_rational(rng, 3, 7);
    if (dx == 0 && dy == 0) continue;
    std::uniform_int_distribution<std::size_t> pick(0, poly.size() - 1);
    std::size_t at = pick(rng);
    bent.vertices[at].x += dx;
    bent.vertices[at].y += dy;
    try {
      bent = normalize(bent);
    } catch (const ValidationError&) {
      continue;
    }
    ctx.require(!congruent(poly, bent, kFree),
                "perturbed polygon stayed congruent at trial " + std::to_string(done));
    ++done;
    ++trials;
  }

  // equivalence axioms on random triples (150)
  for (int t = 0; t < 150 && ctx.failures.size() < 5; ++t, ++trials) {
    Polygon p = testsupport::random_simple_polygon(rng, 3 + t % 5);
    Polygon a = apply_motion(p, testsupport::random_motion(rng, true));
    Polygon b = apply_motion(p, testsupport::random_motion(rng, true));
    Polygon c = apply_motion(p, testsupport::random_motion(rng, true));
    for (CongruenceMode mode : {kFree, kNoReflection}) {
      bool ok = congruent(a, a, mode);
      if (congruent(a, b, mode)) ok = ok && congruent(b, a, mode);
      if (congruent(a, b, mode) && congruent(b, c, mode)) ok = ok && congruent(a, c, mode);
      ctx.require(ok, "equivalence axiom failed at trial " + std::to_string(t));
    }
  }

  // the L and J tetromino outlines split the two modes
  Polygon l = cells_outline({{0, 0}, {0, 1}, {0, 2}, {1, 2}}, 3, Rational(1));
  Polygon j = cells_outline({{1, 0}, {1, 1}, {1, 2}, {0, 2}}, 3, Rational(1));
  ctx.require(congruent(l, j, kFree), "L vs J: not congruent with reflections");
  ctx.require(!congruent(l, j, kNoReflection), "L vs J: congruent without reflections");

  ctx.note = std::to_string(trials) + " randomized trials plus the L/J mode split";
}

// --- criterion 7 ------------------------------------------------------------

void relation_identity(CriterionContext& ctx) {
  Rng rng(0xabcdef);
  std::uniform_int_distribution<long long> dp(3, 20), dn(1, 60), dk(3, 20), dr(0, 40), dm(0, 40);
  long long antecedent_hits = 0;
  int sampled = 0;
  for (int t = 0; t < 10000; ++t) {
    LayoutStats st{dp(rng), dn(rng), dk(rng), dr(rng), dm(rng), true};
    if (t % 2 == 0) {
      long long twice_m = st.n * (st.k - 2) - st.r - st.p + 2;
      if (twice_m >= 0 && twice_m % 2 == 0) st.m = twice_m / 2;
    }
    ++sampled;
    RelationReport rep = check_relations(st);
    if (rep.ineq1_holds && rep.eq2_holds) {
      ++antecedent_hits;
      if (!rep.ineq3_holds) {
        ctx.require(false, "tuple satisfies (1),(2) but not (3): p=" + std::to_string(st.p) +
                               " n=" + std::to_string(st.n) + " k=" + std::to_string(st.k) +
                               " r=" + std::to_string(st.r) + " m=" + std::to_string(st.m));
        if (ctx.failures.size() >= 5) break;
      }
    }
  }
  ctx.require(antecedent_hits > 100, "antecedent exercised too rarely");
  ctx.note = std::to_string(sampled) + " tuples, (1)&(2) held on " +
             std::to_string(antecedent_hits) + ", (3) followed every time";
}

// --- criterion 8 ------------------------------------------------------------

void tile_enumeration(CriterionContext& ctx) {
  auto free_tiles = enumerate_tiles(4, kFree);
  auto one_sided = enumerate_tiles(4, kNoReflection);
  ctx.require(free_tiles.size() == 5, "free tetromino count != 5");
  ctx.require(one_sided.size() == 7, "one-sided tetromino count != 7");

  for (bool refl : {true, false}) {
    auto lib = enumerate_tiles(4, CongruenceMode{refl});
    auto brute = testsupport::brute_force_tiles(4, refl);
    bool equal = lib.size() == brute.size();
    for (std::size_t i = 0; equal && i < lib.size(); ++i) equal = lib[i].cells == brute[i];
    ctx.require(equal, std::string("independent canonicalizer disagrees (reflections ") +
                           (refl ? "on)" : "off)"));
  }
  ctx.note = "5 free / 7 one-sided tetrominoes, matching the brute-force canonicalizer";
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n================\n";
  criterion("friedman-reproduction", friedman_reproduction);
  criterion("counting-bound-exhaustion", counting_bound_exhaustion);
  criterion("equilateral-fixture", equilateral_fixture);
  criterion("construction-properties", construction_properties);
  criterion("relation-cross-check", relation_cross_check);
  criterion("congruence-properties", congruence_properties);
  criterion("relation-identity", relation_identity);
  criterion("tile-enumeration", tile_enumeration);
  if (g_failed_criteria == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << g_failed_criteria << " criteria failed\n";
  return 1;
}
