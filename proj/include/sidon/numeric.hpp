#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sidon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Renders a rational as "p/q" (always with a denominator, "0/1" for zero).
std::string to_fraction_string(const Rational& q);

/// Parses "p/q", "p" or a plain decimal such as "-0.25". Throws PreconditionError.
Rational parse_rational(const std::string& text);

BigInt binomial(std::uint64_t n, std::uint64_t k);

} // namespace sidon
