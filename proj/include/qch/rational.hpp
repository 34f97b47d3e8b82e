#pragma once

#include <gmpxx.h>

#include <string>

namespace qch {

// GMP supplies canonical arbitrary-precision rationals: den > 0, gcd(num, den) = 1
// whenever values are combined arithmetically. Text input is canonicalized
// explicitly in rational_from_string.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& x);

// x^e for a possibly negative exponent; x must be nonzero when e < 0.
Rational pow_rational(const Rational& x, long e);

}  // namespace qch
