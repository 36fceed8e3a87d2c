#pragma once

#include "polypart/geom.hpp"

#include <cstdint>
#include <vector>

namespace polypart {

struct CongruenceMode {
  bool allow_reflection = true;
};

/// Exact exterior-turn certificate: (cross, dot) of consecutive edge vectors
/// reduced to the unique coprime integer pair with the same signs. Two turns
/// are equal iff their pairs are positive scalar multiples of each other,
/// which this reduction makes a plain equality.
struct TurnCode {
  BigInt cross;
  BigInt dot;

  friend bool operator==(const TurnCode& a, const TurnCode& b) {
    return a.cross == b.cross && a.dot == b.dot;
  }
  friend bool operator<(const TurnCode& a, const TurnCode& b) {
    if (a.cross != b.cross) return a.cross < b.cross;
    return a.dot < b.dot;
  }
};

/// One token per vertex: squared length of the outgoing edge plus the turn at
/// the vertex. The token sequence is invariant under every reflection-free
/// rigid motion.
struct SigToken {
  Rational sq_len;
  TurnCode turn;

  friend bool operator==(const SigToken& a, const SigToken& b) {
    return a.sq_len == b.sq_len && a.turn == b.turn;
  }
  friend bool operator<(const SigToken& a, const SigToken& b) {
    if (a.sq_len != b.sq_len) return a.sq_len < b.sq_len;
    return a.turn < b.turn;
  }
};

struct Signature {
  std::vector<SigToken> tokens;

  friend bool operator==(const Signature& a, const Signature& b) = default;
};

// Approximate-mode tokens: lengths and unit-circle turn coordinates rounded
// to the eps grid, so equality is eps-equality and the canonical machinery is
// shared with the exact path.
struct ApproxTurn {
  std::int64_t cross;
  std::int64_t dot;

  friend bool operator==(const ApproxTurn&, const ApproxTurn&) = default;
  friend bool operator<(const ApproxTurn& a, const ApproxTurn& b) {
    if (a.cross != b.cross) return a.cross < b.cross;
    return a.dot < b.dot;
  }
};

struct ApproxToken {
  std::int64_t sq_len;
  ApproxTurn turn;

  friend bool operator==(const ApproxToken&, const ApproxToken&) = default;
  friend bool operator<(const ApproxToken& a, const ApproxToken& b) {
    if (a.sq_len != b.sq_len) return a.sq_len < b.sq_len;
    return a.turn < b.turn;
  }
};

namespace detail {

/// Index of the lexicographically least cyclic rotation (Booth-style
/// two-candidate duel, O(n) comparisons).
template <class T>
std::size_t least_rotation(const std::vector<T>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const T& a = s[(i + len) % n];
    const T& b = s[(j + len) % n];
    if (a == b) {
      ++len;
      continue;
    }
    if (b < a) {
      i += len + 1;
    } else {
      j += len + 1;
    }
    if (i == j) ++j;
    len = 0;
  }
  return std::min(i, j);
}

template <class T>
std::vector<T> rotated_to_least(std::vector<T> v) {
  if (v.empty()) return v;
  std::size_t r = least_rotation(v);
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  return v;
}

// Signature of the mirror image, read off the original tokens: traversing the
// reflected boundary counterclockwise visits the vertices in reverse order,
// keeps every turn value, and pairs each turn with what was the incoming edge.
template <class T>
std::vector<T> mirrored_tokens(const std::vector<T>& t) {
  const std::size_t m = t.size();
  std::vector<T> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    out[j].sq_len = t[(2 * m - j - 1) % m].sq_len;
    out[j].turn = t[(m - j) % m].turn;
  }
  return out;
}

template <class T>
std::vector<T> canonical_tokens(const std::vector<T>& t, CongruenceMode mode) {
  std::vector<T> best = rotated_to_least(t);
  if (mode.allow_reflection) {
    std::vector<T> mir = rotated_to_least(mirrored_tokens(t));
    if (std::lexicographical_compare(mir.begin(), mir.end(), best.begin(), best.end())) {
      best = std::move(mir);
    }
  }
  return best;
}

}  // namespace detail

/// Token sequence of a normalized polygon, one token per vertex.
Signature signature(const Polygon& poly);

/// Lexicographically least cyclic rotation; with reflection allowed, also
/// least over the mirrored reading. Idempotent.
Signature canonical(const Signature& sig, CongruenceMode mode);

/// Decides the congruence of two polygons under translation+rotation
/// (+reflection when the mode allows it). Inputs are normalized internally.
bool congruent(const Polygon& a, const Polygon& b, CongruenceMode mode);

std::vector<ApproxToken> approx_signature(const fp::Polygon& poly, double eps);
bool approx_congruent(const fp::Polygon& a, const fp::Polygon& b, CongruenceMode mode,
                      double eps);

}  // namespace polypart
