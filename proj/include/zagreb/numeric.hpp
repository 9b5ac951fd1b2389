#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zagreb {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact fraction of Integers, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "num/den", denominator always printed (4/1, -1/30).
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace zagreb
