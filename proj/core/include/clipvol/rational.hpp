#pragma once
// Exact rational scalars.
//
// Rational is an arbitrary-precision rational kept in canonical form
// (positive denominator, gcd(|num|, den) = 1); BigInt is the matching
// integer type. Both are GMP-backed boost::multiprecision numbers, so all
// arithmetic is exact and canonicalizing. The helpers here add the pieces
// the volume formulas need on top: integer powers, factorials/binomials,
// strict string parsing, and a deterministic 15-significant-digit decimal
// rendering used for the human-readable "approx" report fields.

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "clipvol/errors.hpp"

namespace clipvol {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// -1, 0 or +1.
inline int sign(const Rational& x) { return x.sign(); }

// base^exp by binary exponentiation; exp < 0 inverts (DivisionByZero on 0).
// 0^0 = 1 by the convention used throughout.
Rational pow(const Rational& base, long exp);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Strict parser for canonical rational strings: "p" or "p/q" with p an
// optionally negated digit string and q a digit string. Anything else,
// including "1//2" or embedded spaces, raises ParseError; a zero
// denominator raises ParseError as well.
Rational parse_rational(const std::string& text);

// Canonical serialization: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Exact decimal rendering with 15 significant digits, round-half-even,
// rendered like printf %.15g (positional for exponents in [-4, 15),
// scientific otherwise, trailing zeros stripped). Computed entirely over
// integers so the output is identical on every platform.
std::string format_approx(const Rational& x);

double to_double(const Rational& x);

}  // namespace clipvol
