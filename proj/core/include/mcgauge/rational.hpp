#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcgauge {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator; values built from a numerator/denominator pair
/// must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optional leading sign). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);
Rational inverse_factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace mcgauge
