#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcoh {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace lcoh
