#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lcagabor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "num/den", with den > 0 (so 3 prints as "3/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", signed, and finite decimals ("0.25" -> 1/4).
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, long exponent);

}  // namespace lcagabor
