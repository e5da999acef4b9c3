#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses sums and differences of integers, decimals and fractions, e.g.
/// "21", "-3/4", "20.5", "41/2+1/10". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& value);

}  // namespace eqcolor
