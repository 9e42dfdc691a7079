#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tkh/rational.hpp"

namespace tkh {

using Exp = std::vector<int>;

/**
 * Sparse Laurent polynomial over Q in named variables.
 *
 * Terms are kept in a std::map keyed by exponent vectors, so iteration order is
 * lexicographic on exponents. Zero coefficients are never stored.
 */
class Poly {
 public:
  using Terms = std::map<Exp, Rational>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  Poly(std::vector<std::string> vars, Terms terms);

  static Poly constant(const std::vector<std::string>& vars, const Rational& c);
  static Poly monomial(const std::vector<std::string>& vars, const Exp& e, const Rational& c = 1);
  static Poly variable(const std::vector<std::string>& vars, const std::string& name, int power = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int var_index(const std::string& name) const;

  // Coefficient of the exponent vector, zero if absent.
  Rational coeff(const Exp& e) const;
  Rational constant_term() const;
  void add_term(const Exp& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const;
  // Multiply by the monomial x^e.
  Poly shifted(const Exp& e) const;

  int max_degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  // Smallest exponent vector componentwise (the monomial gcd, possibly negative).
  Exp min_exponents() const;

  // Coefficient of var^k as a polynomial in the same variables (var exponent 0).
  Poly coefficient_in(std::size_t var, int k) const;
  Poly derivative(std::size_t var) const;

  // Rename/reorder into a new variable list. Variables missing from the target
  // must not occur with nonzero exponent.
  Poly embed(const std::vector<std::string>& target) const;
  // Substitute each variable by a polynomial in the target variable list.
  Poly substitute(const std::vector<std::string>& target, const std::vector<Poly>& images) const;
  // Substitute variable `var` by a monomial image (keeps Laurent structure cheaply).
  Poly map_exponents(const std::vector<std::string>& target,
                     const std::function<Exp(const Exp&)>& f) const;
  // Set a variable to a rational value.
  Poly specialize(std::size_t var, const Rational& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Leading term in lexicographic order.
  const std::pair<const Exp, Rational>& leading() const { return *terms_.rbegin(); }

  std::string str() const;

 private:
  void require_same_vars(const Poly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

// Exact division in the Laurent ring; throws DivisionError carrying the
// remainder if d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);
// Returns true and sets q when d divides p exactly.
bool try_exact_div(const Poly& p, const Poly& d, Poly* q);

// Union of variable lists, preserving first-seen order.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace tkh
