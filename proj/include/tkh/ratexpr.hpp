#pragma once

#include <map>
#include <string>
#include <vector>

#include "tkh/poly.hpp"

namespace tkh {

/**
 * Quotient num / den whose denominator is kept factored.
 *
 * Every denominator met in this library is (up to a unit monomial) a product of
 * binomials 1 - x^e. Those are stored as a multiset keyed by the canonical
 * exponent e (first nonzero entry positive). Anything that does not factor that
 * way lands in `rest`. Sums use the least common multiple of the factor
 * multisets, so no polynomial gcd is ever needed.
 */
class RationalExpression {
 public:
  using Factors = std::map<Exp, int>;

  RationalExpression() = default;
  explicit RationalExpression(Poly num);
  RationalExpression(const Poly& num, const Poly& den);

  static RationalExpression binomial_inverse(const std::vector<std::string>& vars, const Exp& e, int power = 1);

  const std::vector<std::string>& vars() const { return num_.vars(); }
  const Poly& numerator() const { return num_; }
  const Factors& factors() const { return factors_; }
  const Poly& rest() const { return rest_; }
  Poly denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalExpression operator-() const;
  RationalExpression& operator+=(const RationalExpression& o);
  RationalExpression& operator-=(const RationalExpression& o);
  RationalExpression& operator*=(const RationalExpression& o);
  RationalExpression& operator*=(const Poly& p);
  RationalExpression& operator*=(const Rational& c);
  friend RationalExpression operator+(RationalExpression a, const RationalExpression& b) { return a += b; }
  friend RationalExpression operator-(RationalExpression a, const RationalExpression& b) { return a -= b; }
  friend RationalExpression operator*(RationalExpression a, const RationalExpression& b) { return a *= b; }
  friend RationalExpression operator*(RationalExpression a, const Poly& b) { return a *= b; }
  friend RationalExpression operator*(RationalExpression a, const Rational& b) { return a *= b; }
  // Division is only supported when the divisor's numerator factors into
  // binomials and a monomial; otherwise it goes to `rest`.
  RationalExpression operator/(const RationalExpression& o) const;

  // Cancel binomial factors of the denominator that divide the numerator.
  RationalExpression& reduce();
  // Exact conversion; throws DivisionError if the value is not a Laurent polynomial.
  Poly to_poly() const;
  bool try_to_poly(Poly* out) const;

  // Value at a rational point; PoleError names the vanishing factor.
  Rational evaluate(const std::vector<Rational>& point) const;

  // Cross-multiplied equality test.
  friend bool equal(const RationalExpression& a, const RationalExpression& b);

  RationalExpression embed(const std::vector<std::string>& target) const;
  // Monomial change of variables (f must be linear on exponents) applied to
  // the numerator and every factor.
  RationalExpression map_exponents(const std::vector<std::string>& target,
                                   const std::function<Exp(const Exp&)>& f) const;

  std::string str() const;

 private:
  void absorb_denominator(const Poly& den);
  void add_binomial(Exp e, int power);

  Poly num_;
  Factors factors_;
  Poly rest_;  // extra denominator, empty means 1
};

// Splits p = c * x^m * prod (1 - x^e)^k * rest. Candidates e range over the
// box spanned by p's degrees (at most three active variables) and are tried
// largest first.
struct BinomialFactorization {
  Rational unit = 1;
  Exp monomial;
  RationalExpression::Factors factors;
  Poly rest;
};
BinomialFactorization factor_binomials(const Poly& p);

// Canonical exponent for 1 - x^e (first nonzero entry positive); `flipped`
// reports whether e was negated.
Exp canonical_binomial(const Exp& e, bool* flipped);

}  // namespace tkh
