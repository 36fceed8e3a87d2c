#include "polypart/congruence.hpp"

#include <cmath>

namespace polypart {

namespace {

TurnCode make_turn(const Rational& cr, const Rational& dt) {
  // Clear denominators with a positive multiplier, then strip the gcd.
  BigInt c = numerator(cr) * denominator(dt);
  BigInt d = numerator(dt) * denominator(cr);
  BigInt g = gcd(abs(c), abs(d));
  if (g > 1) {
    c /= g;
    d /= g;
  }
  return TurnCode{std::move(c), std::move(d)};
}

}  // namespace

Signature signature(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
  Signature sig;
  sig.tokens.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Point in = v[i] - v[(i + m - 1) % m];
    Point out = v[(i + 1) % m] - v[i];
    SigToken tok;
    tok.sq_len = dot(out, out);
    tok.turn = make_turn(cross(in, out), dot(in, out));
    sig.tokens.push_back(std::move(tok));
  }
  return sig;
}

Signature canonical(const Signature& sig, CongruenceMode mode) {
  return Signature{detail::canonical_tokens(sig.tokens, mode)};
}

bool congruent(const Polygon& a, const Polygon& b, CongruenceMode mode) {
  Polygon na = normalize(a);
  Polygon nb = normalize(b);
  if (na.size() != nb.size()) return false;
  return canonical(signature(na), mode) == canonical(signature(nb), mode);
}

std::vector<ApproxToken> approx_signature(const fp::Polygon& poly, double eps) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
  auto grid = [eps](double x) { return std::llround(x / eps); };
  std::vector<ApproxToken> tokens;
  tokens.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    fp::Point in = v[i] - v[(i + m - 1) % m];
    fp::Point out = v[(i + 1) % m] - v[i];
    double norm = std::sqrt(dot(in, in)) * std::sqrt(dot(out, out));
    ApproxToken tok;
    tok.sq_len = grid(dot(out, out));
    tok.turn = ApproxTurn{grid(cross(in, out) / norm), grid(dot(in, out) / norm)};
    tokens.push_back(tok);
  }
  return tokens;
}

bool approx_congruent(const fp::Polygon& a, const fp::Polygon& b, CongruenceMode mode,
                      double eps) {
  if (a.size() != b.size()) return false;
  return detail::canonical_tokens(approx_signature(a, eps), mode) ==
         detail::canonical_tokens(approx_signature(b, eps), mode);
}

}  // namespace polypart
