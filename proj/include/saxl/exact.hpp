#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace saxl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_decimal(const std::string& text);

}  // namespace saxl
