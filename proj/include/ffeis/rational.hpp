#pragma once

#include <gmpxx.h>

#include <string>

namespace ffeis {

// Exact scalars. GMP's canonical form is exactly the invariant we need:
// lowest terms, positive denominator. No floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized rational from a (possibly unreduced) fraction. den must be
// nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q" or "p" (arbitrary precision). Throws Error(InputError) on
// malformed text or zero denominator.
Rational rational_from_string(const std::string& text);

// Plain rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Always "p/q", denominator included. Used for byte-stable JSON output.
std::string to_fraction_string(const Rational& value);

Integer pow_integer(const Integer& base, unsigned long exp);

// base^exp with negative exponents allowed (base nonzero in that case).
Rational pow_rational(const Rational& base, long exp);

}  // namespace ffeis
