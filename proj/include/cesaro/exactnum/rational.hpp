#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cesaro {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (denominator > 0, gcd 1); values built from a numerator/denominator pair
/// must go through `rational()` so they are canonicalized too.
using BigRational = mpq_class;
using BigInteger = mpz_class;

BigRational rational(long numerator, long denominator = 1);
BigRational rational(const BigInteger& numerator, const BigInteger& denominator);

/// Parses "p/q", an integer, or a plain decimal ("-0.25") exactly.
/// Exponents, "inf", "nan" and anything else are rejected with DomainError.
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

int sign(const BigRational& value);
BigInteger floor(const BigRational& value);
BigInteger ceil(const BigRational& value);
BigRational abs(const BigRational& value);
double to_double(const BigRational& value);

/// value * 2^exponent rounded toward -inf / +inf, as an integer.
BigInteger scaled_floor(const BigRational& value, unsigned exponent);
BigInteger scaled_ceil(const BigRational& value, unsigned exponent);

/// Smallest-denominator rational in the open interval (lo, hi); lo < hi.
BigRational simplest_between(const BigRational& lo, const BigRational& hi);

}  // namespace cesaro
