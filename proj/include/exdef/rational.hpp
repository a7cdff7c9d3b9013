#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace exdef {

/// Exact rational scalar.  Backed by GMP; always canonical (lowest terms,
/// positive denominator).  No floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p", "-p" or "p/q".  Throws ParseError on malformed input or a
/// zero denominator.  Result is canonicalized.
Rational rational_from_string(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Combined operand size in bits; the pivot-selection metric for the
/// fraction-free elimination.
std::size_t bit_size(const Rational& value);

/// Largest integer strictly below `value` plus one, i.e. the smallest
/// integer > value.  Used for truncation thresholds.
long smallest_integer_above(const Rational& value);

}  // namespace exdef
