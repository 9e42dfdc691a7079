#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tkh/poly.hpp"
#include "tkh/ratexpr.hpp"
#include "tkh/tableaux.hpp"

namespace tkh {

struct TorusKnot {
  int m = 1, n = 1;
  TorusKnot() = default;
  TorusKnot(int m_, int n_);
  std::string str() const;
};

// Variable names for the DAHA parameters (fraktur a, q, t).
const std::vector<std::string>& daha_vars();
// (a, q, tc) after the homological change of variables.
const std::vector<std::string>& homological_vars();

struct SuperPolynomial {
  TorusKnot knot;
  Poly value;
  // Human-readable record of the monomial applied on top of the raw sum.
  std::string normalization;
};

int s_fraction(int m, int n, int i);

struct ShapeConstants {
  RationalExpression gamma_tilde;
  Poly g_mu;
};
ShapeConstants shape_constants(const Partition& mu);

// Configured upper bound on n for the symbolic backend.
inline constexpr int kDahaSymbolicLimit = 7;

/**
 * Unreduced DAHA superpolynomial of T_{m,n} by summing over standard tableaux.
 *
 * With x_i = q^{-col} t^{row} for the box labelled i, each tableau contributes
 *   prod_i x_i^{S(i)} (1 - a/x_i)(q - t x_i)
 *   / prod_k (1 - q x_{k+1} / (t x_k))
 *   * prod_{i<j} (x_j - q x_i)(t x_j - x_i) / ((x_j - x_i)(t x_j - q x_i)),
 * and shape mu is weighted by gamma~^n / g~_mu. The result is multiplied by
 * t^{m-1}, which makes it symmetric in (m, n).
 */
SuperPolynomial daha_superpoly(const TorusKnot& k, int symbolic_limit = kDahaSymbolicLimit);
// daha_superpoly divided by the unknot value; a Laurent polynomial.
Poly daha_reduced(const TorusKnot& k, int symbolic_limit = kDahaSymbolicLimit);
// Same sum evaluated exactly at a rational point.
Rational daha_at_point(const TorusKnot& k, const Rational& a, const Rational& q, const Rational& t);

// a = -a^2 tc, q = q^2 tc^2, t = q^2. Input in daha_vars().
Poly specialize_homological(const Poly& p);
// a = t^N; result in daha_vars() with no a.
Poly specialize_slN(const Poly& p, int N);

}  // namespace tkh
