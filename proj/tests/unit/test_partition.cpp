#include "polypart/partition.hpp"

#include "polypart/bounds.hpp"
#include "polypart/grid.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

using namespace polypart;
using testsupport::Rng;

namespace {

Polygon make(std::initializer_list<std::pair<int, int>> pts) {
  Polygon p;
  for (auto [x, y] : pts) p.vertices.push_back(Point{Rational(x), Rational(y)});
  return p;
}

Partition square_bisection() {
  Partition part;
  part.region = make({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  part.tiles = {make({{0, 0}, {1, 0}, {1, 2}, {0, 2}}), make({{1, 0}, {2, 0}, {2, 2}, {1, 2}})};
  return part;
}

// A 3x7 strip (rows top-down) minus the half cell at the top-left corner,
// tiled by five L-tetrominoes; cell lists frozen from a verified cover.
Partition friedman_fixture() {
  Partition part;
  part.region = make({{0, 0}, {7, 0}, {7, 3}, {1, 3}, {0, 2}});
  const std::vector<std::vector<Cell>> pieces = {
      {{1, 0}, {2, 0}, {3, 0}, {1, 1}}, {{5, 0}, {6, 0}, {6, 1}, {6, 2}},
      {{4, 0}, {2, 1}, {3, 1}, {4, 1}}, {{5, 1}, {3, 2}, {4, 2}, {5, 2}},
      {{0, 1}, {0, 2}, {1, 2}, {2, 2}},
  };
  for (const auto& cells : pieces) part.tiles.push_back(cells_outline(cells, 3, Rational(1)));
  return part;
}

Partition t_junction_dominoes() {
  Partition part;
  part.region = make({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
  part.tiles = {
      make({{0, 0}, {1, 0}, {1, 2}, {0, 2}}),  // vertical domino
      make({{1, 0}, {3, 0}, {3, 1}, {1, 1}}),
      make({{1, 1}, {3, 1}, {3, 2}, {1, 2}}),
  };
  return part;
}

}  // namespace

TEST_CASE("bisecting the square is a perfect congruent partition") {
  VerificationReport rep = verify(square_bisection());
  CHECK(rep.mutually_congruent);
  CHECK(rep.all_contained);
  CHECK(rep.overlap_area == 0);
  CHECK(rep.leftover_area == 0);
  CHECK(rep.leftover_fraction == 0);
  CHECK(rep.perfect);
  CHECK(rep.tiles_convex);
  CHECK(rep.valid);
}

TEST_CASE("the Friedman pentagon layout leaves exactly half a unit") {
  Partition part = friedman_fixture();
  VerificationReport rep = verify(part);
  CHECK(rep.mutually_congruent);
  CHECK(rep.all_contained);
  CHECK(rep.overlap_area == 0);
  CHECK(rep.leftover_area == Rational(1, 2));
  CHECK(rep.leftover_fraction == Rational(1, 41));
  CHECK_FALSE(rep.perfect);
  CHECK_FALSE(rep.tiles_convex);
  CHECK(rep.valid);
}

TEST_CASE("overlapping tiles are reported, not errors") {
  Partition part;
  part.region = make({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  part.tiles = {make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  part.tiles[1].vertices.clear();
  for (const auto& p : make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}).vertices) {
    part.tiles[1].vertices.push_back(Point{p.x + Rational(1, 2), p.y});
  }
  VerificationReport rep = verify(part);
  CHECK(rep.overlap_area == Rational(1, 2));
  CHECK_FALSE(rep.perfect);
  CHECK_FALSE(rep.valid);
}

TEST_CASE("invalid polygons in a partition raise validation errors") {
  Partition part;
  part.region = make({{0, 0}, {2, 2}, {2, 0}, {0, 2}});  // bowtie
  part.tiles = {make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  CHECK_THROWS_AS(verify(part), ValidationError);
}

TEST_CASE("layout stats of the square bisection") {
  LayoutStats st = layout_stats(square_bisection());
  CHECK(st == LayoutStats{4, 2, 4, 2, 0, true});
  // relation (2): n(k-2) = 2m + r + p - 2
  CHECK(st.n * (st.k - 2) == 2 * st.m + st.r + st.p - 2);
}

TEST_CASE("layout stats of a quartered triangle") {
  Partition part;
  part.region = make({{0, 0}, {2, 0}, {0, 2}});
  part.tiles = {
      make({{0, 0}, {1, 0}, {0, 1}}),
      make({{1, 0}, {2, 0}, {1, 1}}),
      make({{0, 1}, {1, 1}, {0, 2}}),
      make({{1, 0}, {1, 1}, {0, 1}}),
  };
  LayoutStats st = layout_stats(part);
  CHECK(st == LayoutStats{3, 4, 3, 3, 0, true});
  CHECK(st.n * (st.k - 2) == 2 * st.m + st.r + st.p - 2);
}

TEST_CASE("the three-domino T-junction layout is flagged and fails relation (2)") {
  Partition part = t_junction_dominoes();
  CHECK(verify(part).perfect);
  LayoutStats st = layout_stats(part);
  CHECK(st.p == 4);
  CHECK(st.n == 3);
  CHECK(st.k == 4);
  CHECK(st.r == 3);
  CHECK(st.m == 1);
  CHECK_FALSE(st.edge_to_edge);
  RelationReport rel = check_relations(st);
  CHECK_FALSE(rel.eq2_holds);
  CHECK(st.n * (st.k - 2) == 6);
  CHECK(2 * st.m + st.r + st.p - 2 == 7);
}

TEST_CASE("layout stats require a perfect partition") {
  Partition part = friedman_fixture();  // leftover 1/2
  CHECK_THROWS_AS(layout_stats(part), std::invalid_argument);
}

TEST_CASE("compare_partitions orders by leftover then simplicity") {
  Partition bisect = square_bisection();

  Partition diagonal;
  diagonal.region = bisect.region;
  diagonal.tiles = {make({{0, 0}, {2, 0}, {2, 2}}), make({{0, 0}, {2, 2}, {0, 2}})};

  Partition skinny;  // two quarter-width strips, leftover half the square
  skinny.region = bisect.region;
  skinny.tiles = {
      make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
      make({{1, 0}, {2, 0}, {2, 1}, {1, 1}}),
  };

  CHECK(compare_partitions(bisect, skinny) == std::strong_ordering::less);
  CHECK(compare_partitions(skinny, bisect) == std::strong_ordering::greater);
  // both perfect: triangles (k=3) precede rectangles (k=4)
  CHECK(compare_partitions(diagonal, bisect) == std::strong_ordering::less);
  CHECK(compare_partitions(bisect, bisect) == std::strong_ordering::equal);

  Partition other_region = bisect;
  other_region.region = make({{0, 0}, {4, 0}, {4, 1}, {0, 1}});
  CHECK_THROWS_AS(compare_partitions(bisect, other_region), std::invalid_argument);
  Partition fewer = bisect;
  fewer.tiles.pop_back();
  CHECK_THROWS_AS(compare_partitions(bisect, fewer), std::invalid_argument);
}

TEST_CASE("property: tile areas plus leftover equals the region area") {
  Partition friedman = friedman_fixture();
  VerificationReport rep = verify(friedman);
  Rational total(0);
  for (const auto& t : friedman.tiles) total += area(normalize(t));
  CHECK(total + rep.leftover_area == area(normalize(friedman.region)));
}

TEST_CASE("property: verification is invariant under a common rigid motion") {
  Rng rng(246810);
  Partition base = friedman_fixture();
  VerificationReport expect = verify(base);
  for (int trial = 0; trial < 10; ++trial) {
    RigidMotion m = testsupport::random_motion(rng, true);
    Partition moved;
    moved.region = apply_motion(base.region, m);
    for (const auto& t : base.tiles) moved.tiles.push_back(apply_motion(t, m));
    VerificationReport rep = verify(moved);
    CHECK(rep.mutually_congruent == expect.mutually_congruent);
    CHECK(rep.all_contained == expect.all_contained);
    CHECK(rep.overlap_area == expect.overlap_area);
    CHECK(rep.leftover_area == expect.leftover_area);
    CHECK(rep.leftover_fraction == expect.leftover_fraction);
    CHECK(rep.perfect == expect.perfect);
  }
}
