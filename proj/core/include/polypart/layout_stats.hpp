#pragma once

namespace polypart {

/// Vertex census of a perfect partition layout: p vertices of the region, n
/// tiles of k vertices each, r layout vertices on the region boundary that
/// are not region vertices, m layout vertices interior to the region.
/// edge_to_edge is false when some tile corner sits strictly inside another
/// tile's edge (a T-junction).
struct LayoutStats {
  long long p = 0;
  long long n = 0;
  long long k = 0;
  long long r = 0;
  long long m = 0;
  bool edge_to_edge = true;

  friend bool operator==(const LayoutStats&, const LayoutStats&) = default;
};

}  // namespace polypart
