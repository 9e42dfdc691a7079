#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "tkh/poly.hpp"
#include "tkh/rational.hpp"

namespace tkh {

struct Grading {
  int a = 0, q = 0, tr = 0, tc = 0;
  friend bool operator==(const Grading& x, const Grading& y) {
    return x.a == y.a && x.q == y.q && x.tr == y.tr && x.tc == y.tc;
  }
  friend bool operator<(const Grading& x, const Grading& y) {
    return std::tie(x.a, x.q, x.tr, x.tc) < std::tie(y.a, y.q, y.tr, y.tc);
  }
};

// u-exponents for generators 1..M and a bitmask of odd generators (bit i-1 for xi_i).
struct SuperMonomial {
  std::vector<int> u;
  std::uint64_t xi = 0;

  int xi_count() const;
  friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) { return a.u == b.u && a.xi == b.xi; }
  friend bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
    return a.u != b.u ? a.u < b.u : a.xi < b.xi;
  }
};

// Term order used to pick normal forms: higher-index generators dominate.
bool monomial_greater(const SuperMonomial& a, const SuperMonomial& b);

/**
 * Supercommutative ring on even u_i and odd xi_i, i in [first, M]. Each
 * generator carries a (q, tc, tr) degree; odd generators also have a = 2.
 */
class SuperRing {
 public:
  SuperRing() = default;
  // Koszul gradings for color r; generators first..M are active.
  static SuperRing koszul(int M, int r, int first);
  // Only even generators with the given q-degrees.
  static SuperRing even_only(std::vector<int> q_degrees);

  int M() const { return M_; }
  int first() const { return first_; }
  bool has_odd() const { return has_odd_; }
  bool active(int i) const { return i >= first_ && i <= M_; }

  Grading u_grading(int i) const { return ug_[static_cast<std::size_t>(i - 1)]; }
  Grading xi_grading(int i) const { return xg_[static_cast<std::size_t>(i - 1)]; }
  Grading grading(const SuperMonomial& m) const;
  std::string str(const SuperMonomial& m) const;
  // u-variable names u1..uM for polynomial interop.
  std::vector<std::string> u_vars() const;
  SuperMonomial one() const;

 private:
  int M_ = 0, first_ = 1;
  bool has_odd_ = true;
  std::vector<Grading> ug_, xg_;
};

class SuperRingElement {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  SuperRingElement() = default;
  static SuperRingElement monomial(const SuperMonomial& m, const Rational& c = 1);
  // Even element from a polynomial in u1..uM.
  static SuperRingElement from_poly(const Poly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SuperMonomial& m, const Rational& c);

  SuperRingElement& operator+=(const SuperRingElement& o);
  SuperRingElement& operator*=(const Rational& c);
  friend SuperRingElement operator*(const SuperRingElement& a, const SuperRingElement& b);
  friend bool operator==(const SuperRingElement& a, const SuperRingElement& b) { return a.terms_ == b.terms_; }

  std::string str(const SuperRing& ring) const;

 private:
  Terms terms_;
};

// Product of monomials; returns false when the odd parts overlap.
bool multiply_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial* out, int* sign);

}  // namespace tkh
