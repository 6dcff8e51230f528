#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace springer_rca {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive denominator)
/// as long as they are built through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; accepts "p", "-p", "p/q". Throws ArgumentError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace springer_rca
