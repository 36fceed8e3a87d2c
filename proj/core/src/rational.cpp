#include "polypart/rational.hpp"

#include <stdexcept>

namespace polypart {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    if (slash == 0 || slash + 1 >= text.size()) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double d) { return Rational(d); }

}  // namespace polypart
