#include "polypart/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace polypart {

namespace {

long long floor_div(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

RelationReport check_relations(const LayoutStats& st) {
  if (st.p < 3 || st.k < 3 || st.n < 1 || st.r < 0 || st.m < 0) {
    throw std::invalid_argument("layout stats out of range: need p>=3, k>=3, n>=1, r,m>=0");
  }
  RelationReport rep;
  rep.ineq1_holds = st.n * st.k >= 3 * st.m + 2 * st.r + st.p;
  rep.eq2_holds = st.n * (st.k - 2) == 2 * st.m + st.r + st.p - 2;
  rep.ineq3_holds = (6 - st.k) * st.n >= st.r - st.p + 6;
  rep.alpha = st.k - st.p;
  return rep;
}

std::optional<long long> max_alpha(long long p, long long n, long long r) {
  if (p < 3 || n < 2 || r < 0) {
    throw std::invalid_argument("max_alpha needs p>=3, n>=2, r>=0");
  }
  // Relation (3) with k = p + alpha rearranges to alpha*n <= (6-p)(n-1) - r.
  long long a = floor_div((6 - p) * (n - 1) - r, n);
  if (a < 1) return std::nullopt;
  return a;
}

std::vector<FeasibleTuple> enumerate_feasible(long long max_p, long long max_n, long long max_r,
                                              long long min_alpha) {
  if (max_p < 3 || max_n < 2 || max_r < 0 || min_alpha < 1) {
    throw std::invalid_argument("enumerate_feasible needs max_p>=3, max_n>=2, max_r>=0, min_alpha>=1");
  }
  std::vector<FeasibleTuple> out;
  for (long long p = 3; p <= max_p; ++p) {
    for (long long n = 2; n <= max_n; ++n) {
      for (long long r = 0; r <= max_r; ++r) {
        // Any tuple passing (1) and (2) also passes (3), so the alpha range
        // from max_alpha is an exact prune.
        long long hi = floor_div((6 - p) * (n - 1) - r, n);
        for (long long alpha = min_alpha; alpha <= hi; ++alpha) {
          long long k = p + alpha;
          long long twice_m = n * (k - 2) - r - p + 2;
          if (twice_m < 0 || twice_m % 2 != 0) continue;
          long long m = twice_m / 2;
          if (n * k < 3 * m + 2 * r + p) continue;
          out.push_back(FeasibleTuple{p, n, k, r, m});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long k_upper_bound(long long p, long long n) {
  if (p < 3 || n < 1) throw std::invalid_argument("k_upper_bound needs p>=3, n>=1");
  return 6 + floor_div(p - 6, n);
}

}  // namespace polypart
