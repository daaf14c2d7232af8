#pragma once

#include <gmpxx.h>

#include <string>

namespace abcu {

// Every probability and expectation in this library is an exact rational,
// kept in canonical form (lowest terms, positive denominator). GMP's
// mpq_class already maintains that invariant through arithmetic; the helpers
// below cover the string boundary used by instance files and result
// documents.
using Rational = mpq_class;

// Accepts "7/20", "0.35", "-3/2", "1", ".5". Decimal literals convert
// exactly (0.35 -> 7/20). Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

// Canonical fraction rendering: "0", "1", "19/32", "-3/2".
std::string to_fraction_string(const Rational& r);

// Correctly rounded decimal rendering with at most `digits` fractional
// digits. Terminating expansions print in full ("19/32" -> "0.59375"),
// others are rounded half-up at the last digit ("1/3" -> "0.333333333333").
std::string to_decimal_string(const Rational& r, int digits = 12);

bool is_probability(const Rational& r);  // 0 <= r <= 1

// (1-p)^e and p^e style helpers; exact.
Rational rational_pow(const Rational& base, unsigned long exponent);

}  // namespace abcu
