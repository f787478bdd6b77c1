#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace juliareal {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal ("-0.25") into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Every finite double is a dyadic rational; this returns it without rounding.
Rational exact_rational(double x);

/// Natural log of |n| for n != 0, accurate to a few ulps for any size.
double log_abs(const BigInt& n);

/// Number of bits in |n|.
std::size_t bit_length(const BigInt& n);

/// Largest k with p^k | n (n != 0, p >= 2).
int valuation(const BigInt& n, unsigned long p);

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& q, unsigned long p);

}  // namespace juliareal
