#pragma once

#include <gmpxx.h>

#include <string>

namespace ptab {

using BigInt = mpz_class;
// Always canonical (reduced, positive denominator) after construction
// through make_rational or arithmetic.
using Rational = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

std::string to_string(const BigInt& v);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

// Decimal rendering with `digits` significant digits, printf %g style.
std::string to_decimal(const Rational& v, int digits = 12);
std::string to_decimal(const mpf_class& v, int digits = 12);

// Working precision (bits) for mpf values derived from exact rationals.
inline constexpr unsigned long kDecimalPrecisionBits = 512;

}  // namespace ptab
