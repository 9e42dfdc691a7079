#pragma once

#include <gmpxx.h>

#include <string>

namespace tkh {

// GMP rationals are kept canonical after every arithmetic operation, which is
// the invariant the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

Rational binomial(const Rational& alpha, unsigned k);
Integer factorial(unsigned n);
Rational rpow(const Rational& base, int exponent);

}  // namespace tkh
