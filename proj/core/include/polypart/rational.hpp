#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polypart {

// Exact arbitrary-precision arithmetic carrier. cpp_rational keeps values in
// lowest terms with a positive denominator, so every coordinate and area in
// the exact pipeline is a canonical fraction.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "-a" or "a/b" (b > 0 after sign normalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Formats as "a" when integral, "a/b" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double d);

}  // namespace polypart
