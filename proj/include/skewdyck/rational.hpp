#pragma once

#include <string>

#include <gmpxx.h>

namespace skew {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with den > 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Decimal for integers, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);

// Binomial coefficient with a signed upper index. For negative n the
// convention C(-m, k) = (-1)^k C(m+k-1, k) is used. Zero for k < 0.
Integer binomial(long n, long k);

// 2^e for any signed e.
Rational pow2(long e);

}  // namespace skew
