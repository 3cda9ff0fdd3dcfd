#pragma once

#include <gmpxx.h>

#include <string>

namespace iscount {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "12", "-3", "12/13" or "0.125" as an exact rational (decimals are
// exact over a power of ten; no exponent notation). Throws input_error on
// anything else.
Rat parse_number(const std::string& token);

// Canonical token form: "n" when the denominator is 1, else "p/q" in lowest
// terms. parse_number(to_token(x)) == x.
std::string to_token(const Rat& x);

// Fixed-point decimal with `digits` fractional digits, round-half-even.
std::string to_decimal_string(const Rat& x, int digits);

// Largest a >= 0 with base^a <= x. Requires base > 1 and x >= 1. Exact
// rational exponentiate-and-compare (doubling then binary search); never
// floating point.
long floor_log(const Rat& base, const Rat& x);

// base^e for integer e; negative e requires base != 0.
Rat pow_rat(const Rat& base, long e);

Int pow_int(const Int& base, unsigned long e);

}  // namespace iscount
