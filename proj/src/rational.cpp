#include "tkh/rational.hpp"

#include "tkh/errors.hpp"

namespace tkh {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InputError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational binomial(const Rational& alpha, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= (alpha - i);
    out /= (i + 1);
  }
  return out;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw PoleError("zero to a negative power");
    return rpow(1 / base, -exponent);
  }
  Rational out = 1;
  Rational b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace tkh
