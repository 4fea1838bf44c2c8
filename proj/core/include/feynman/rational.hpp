#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace feynman {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "-p/q" or an integer string. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Renders as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace feynman
