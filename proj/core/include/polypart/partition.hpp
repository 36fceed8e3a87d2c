#pragma once

#include "polypart/congruence.hpp"
#include "polypart/layout_stats.hpp"

#include <compare>
#include <vector>

namespace polypart {

/// A candidate congruent partition: the region P plus N tiles, with the
/// congruence mode the tiles are compared under.
struct Partition {
  Polygon region;
  std::vector<Polygon> tiles;
  CongruenceMode mode;
};

template <class S>
struct BasicReport {
  bool mutually_congruent = false;
  bool all_contained = false;
  S overlap_area{};
  S leftover_area{};
  S leftover_fraction{};
  bool perfect = false;
  bool tiles_convex = false;
  /// Congruent, contained, and area-disjoint (shared edges are fine).
  bool valid = false;
};

using VerificationReport = BasicReport<Rational>;
using ApproxVerificationReport = BasicReport<double>;

/// Full check of a candidate partition: mutual congruence, containment in the
/// region, pairwise overlap area, exact leftover area and fraction.
/// leftover_area equals area(region) - sum(tile areas) whenever the partition
/// is valid; perfect additionally means zero leftover.
VerificationReport verify(const Partition& part);

/// Same checks with floating-point coordinates and tolerance eps, for
/// partitions whose exact coordinates only approximate irrational ones.
ApproxVerificationReport verify_approx(const Partition& part, double eps = 1e-9);

/// Vertex census of a perfect partition (throws std::invalid_argument when
/// the partition is not perfect or tiles have differing vertex counts).
LayoutStats layout_stats(const Partition& part);
LayoutStats layout_stats_approx(const Partition& part, double eps = 1e-9);

/// Orders by leftover area (optimality), then tile edge count (simplicity).
/// Both partitions must be valid, over the same region, with the same N.
std::strong_ordering compare_partitions(const Partition& a, const Partition& b);

}  // namespace polypart
