#include "polypart/partition.hpp"

#include <stdexcept>

namespace polypart {

namespace {

template <class K, class CongruentFn, class S = typename K::Scalar>
BasicReport<S> verify_impl(const PolygonT<S>& region_raw, const std::vector<PolygonT<S>>& tiles_raw,
                           const K& k, const CongruentFn& congruent_fn) {
  PolygonT<S> region = normalize(region_raw, k);
  std::vector<PolygonT<S>> tiles;
  tiles.reserve(tiles_raw.size());
  for (const auto& t : tiles_raw) tiles.push_back(normalize(t, k));

  BasicReport<S> rep;

  rep.mutually_congruent = true;
  for (std::size_t i = 1; i < tiles.size(); ++i) {
    if (!congruent_fn(tiles[0], tiles[i])) {
      rep.mutually_congruent = false;
      break;
    }
  }

  rep.tiles_convex = true;
  for (const auto& t : tiles) {
    if (!is_convex(t, k)) {
      rep.tiles_convex = false;
      break;
    }
  }

  auto region_tris = triangulate(region, k);
  std::vector<std::vector<PolygonT<S>>> tile_tris;
  tile_tris.reserve(tiles.size());
  for (const auto& t : tiles) tile_tris.push_back(triangulate(t, k));

  rep.all_contained = true;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    S inter = detail::triangulation_intersection_area(region_tris, tile_tris[i], k);
    if (k.sign(area(tiles[i], k) - inter) != 0) {
      rep.all_contained = false;
      break;
    }
  }

  S overlap{};
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      overlap += detail::triangulation_intersection_area(tile_tris[i], tile_tris[j], k);
    }
  }
  rep.overlap_area = overlap;

  S region_area = area(region, k);
  S tile_total{};
  for (const auto& t : tiles) tile_total += area(t, k);

  rep.leftover_area = region_area - tile_total + overlap;
  rep.valid = rep.mutually_congruent && rep.all_contained && k.sign(overlap) == 0;
  rep.perfect = rep.valid && k.sign(rep.leftover_area) == 0;

  S frac = rep.leftover_area / region_area;
  if (k.sign(frac) < 0) frac = S{};
  if (k.sign(frac - S(1)) > 0) frac = S(1);
  rep.leftover_fraction = frac;
  return rep;
}

template <class K, class S = typename K::Scalar>
LayoutStats stats_impl(const PolygonT<S>& region_raw, const std::vector<PolygonT<S>>& tiles_raw,
                       const K& k) {
  PolygonT<S> region = normalize(region_raw, k);
  std::vector<PolygonT<S>> tiles;
  for (const auto& t : tiles_raw) tiles.push_back(normalize(t, k));
  if (tiles.empty()) throw std::invalid_argument("layout statistics need at least one tile");

  const std::size_t kverts = tiles[0].size();
  for (const auto& t : tiles) {
    if (t.size() != kverts) {
      throw std::invalid_argument("layout statistics undefined: tiles have differing vertex counts");
    }
  }

  // Distinct layout vertices (linear-scan dedup keeps the eps mode honest).
  std::vector<PointT<S>> verts;
  for (const auto& t : tiles) {
    for (const auto& p : t.vertices) {
      bool seen = false;
      for (const auto& q : verts) {
        if (k.point_eq(q, p)) {
          seen = true;
          break;
        }
      }
      if (!seen) verts.push_back(p);
    }
  }

  LayoutStats st;
  st.p = static_cast<long long>(region.size());
  st.n = static_cast<long long>(tiles.size());
  st.k = static_cast<long long>(kverts);
  for (const auto& q : verts) {
    switch (locate_point(region, q, k)) {
      case PointLoc::Vertex:
        break;
      case PointLoc::Boundary:
        ++st.r;
        break;
      case PointLoc::Interior:
        ++st.m;
        break;
      case PointLoc::Outside:
        throw std::invalid_argument("tile vertex lies outside the region");
    }
  }

  st.edge_to_edge = true;
  for (const auto& q : verts) {
    for (const auto& t : tiles) {
      const std::size_t mt = t.size();
      for (std::size_t i = 0; i < mt && st.edge_to_edge; ++i) {
        const auto& a = t[i];
        const auto& b = t[(i + 1) % mt];
        if (k.point_eq(q, a) || k.point_eq(q, b)) continue;
        if (detail::on_segment(a, b, q, k)) st.edge_to_edge = false;
      }
      if (!st.edge_to_edge) break;
    }
    if (!st.edge_to_edge) break;
  }
  return st;
}

}  // namespace

VerificationReport verify(const Partition& part) {
  const ExactKernel k{};
  return verify_impl(part.region, part.tiles, k,
                                  [&](const Polygon& a, const Polygon& b) {
                                    return congruent(a, b, part.mode);
                                  });
}

ApproxVerificationReport verify_approx(const Partition& part, double eps) {
  const EpsKernel k{eps};
  fp::Polygon region = fp::lower(part.region);
  std::vector<fp::Polygon> tiles;
  tiles.reserve(part.tiles.size());
  for (const auto& t : part.tiles) tiles.push_back(fp::lower(t));
  return verify_impl(region, tiles, k,
                                [&](const fp::Polygon& a, const fp::Polygon& b) {
                                  return approx_congruent(a, b, part.mode, eps);
                                });
}

LayoutStats layout_stats(const Partition& part) {
  if (!verify(part).perfect) {
    throw std::invalid_argument("layout statistics require a perfect partition");
  }
  return stats_impl(part.region, part.tiles, ExactKernel{});
}

LayoutStats layout_stats_approx(const Partition& part, double eps) {
  if (!verify_approx(part, eps).perfect) {
    throw std::invalid_argument("layout statistics require a perfect partition");
  }
  fp::Polygon region = fp::lower(part.region);
  std::vector<fp::Polygon> tiles;
  for (const auto& t : part.tiles) tiles.push_back(fp::lower(t));
  return stats_impl(region, tiles, EpsKernel{eps});
}

std::strong_ordering compare_partitions(const Partition& a, const Partition& b) {
  if (a.tiles.size() != b.tiles.size()) {
    throw std::invalid_argument("partitions have different tile counts");
  }
  if (!cyclically_equal(normalize(a.region), normalize(b.region))) {
    throw std::invalid_argument("partitions are over different regions");
  }
  VerificationReport ra = verify(a);
  VerificationReport rb = verify(b);
  if (!ra.valid || !rb.valid) {
    throw std::invalid_argument("both partitions must verify as valid congruent partitions");
  }
  if (ra.leftover_area != rb.leftover_area) {
    return ra.leftover_area < rb.leftover_area ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  }
  std::size_t ka = normalize(a.tiles[0]).size();
  std::size_t kb = normalize(b.tiles[0]).size();
  if (ka != kb) return ka < kb ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace polypart
