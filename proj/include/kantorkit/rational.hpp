#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kantorkit {

/// Exact rational scalar. GMP keeps the value canonical (gcd 1, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace kantorkit
