#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace cmpoly {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws UsageError if den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", or "p/q". Throws UsageError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& value);

/// Combined bit length of numerator and denominator; used to rank pivots.
std::size_t bit_size(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace cmpoly
