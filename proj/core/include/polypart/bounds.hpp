#pragma once

#include "polypart/layout_stats.hpp"

#include <optional>
#include <vector>

namespace polypart {

// Counting relations over a perfect convex edge-to-edge layout, with
// quantities in units of the layout census (p, n, k, r, m):
//   (1)  n*k >= 3m + 2r + p          (>=3 tiles meet at interior vertices)
//   (2)  n*(k-2) = 2m + r + p - 2    (angle sums in units of pi)
//   (3)  (6-k)*n >= r - p + 6        (algebraic consequence of (1) and (2))

struct RelationReport {
  bool ineq1_holds = false;
  bool eq2_holds = false;
  bool ineq3_holds = false;
  long long alpha = 0;  // k - p, may be negative

  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

/// Evaluates relations (1)-(3) exactly over integers.
RelationReport check_relations(const LayoutStats& stats);

/// Largest integer alpha >= 1 with k = p + alpha still admitted by relation
/// (3); nullopt when no such alpha exists. Exact over rationals.
std::optional<long long> max_alpha(long long p, long long n, long long r);

struct FeasibleTuple {
  long long p = 0;
  long long n = 0;
  long long k = 0;
  long long r = 0;
  long long m = 0;

  friend bool operator==(const FeasibleTuple&, const FeasibleTuple&) = default;
  friend bool operator<(const FeasibleTuple& a, const FeasibleTuple& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    if (a.r != b.r) return a.r < b.r;
    return a.m < b.m;
  }
};

/// All tuples with 3 <= p <= max_p, 2 <= n <= max_n, 0 <= r <= max_r,
/// k = p + alpha for alpha >= min_alpha, and m solved from relation (2)
/// (kept only when integral and nonnegative) that also satisfy relation (1).
/// Sorted lexicographically; these are necessary conditions only.
std::vector<FeasibleTuple> enumerate_feasible(long long max_p, long long max_n, long long max_r,
                                              long long min_alpha = 1);

/// Largest k consistent with relation (3) at r = 0: floor(6 + (p-6)/n).
/// An upper bound only; never asserts a partition exists.
long long k_upper_bound(long long p, long long n);

}  // namespace polypart
