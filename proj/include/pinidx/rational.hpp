#pragma once

// Exact arithmetic helpers shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pinidx {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical p/q from integers; throws std::domain_error on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Parses an exact rational literal: [+-]digits[/digits]. Anything else,
// including decimal points and exponents, throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// r reduced into [0, modulus).
Rational reduce_mod(const Rational& r, const Rational& modulus);

Integer pow2(unsigned exponent);

// Exponent e when the denominator is exactly 2^e, otherwise -1.
long dyadic_exponent(const Rational& r);

inline int sign_of_parity(unsigned long k) { return (k & 1UL) ? -1 : 1; }

}  // namespace pinidx
