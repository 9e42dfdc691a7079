#pragma once

#include <map>
#include <vector>

#include "tkh/linalg.hpp"
#include "tkh/ratexpr.hpp"
#include "tkh/tableaux.hpp"

namespace tkh {

// (q, t) coefficient ring of symmetric functions.
const std::vector<std::string>& sym_vars();

enum class SymBasis { monomial, powersum, macdonald };

struct SymFunc {
  SymBasis basis = SymBasis::monomial;
  std::map<Partition, RationalExpression> coords;

  static SymFunc basis_element(SymBasis b, const Partition& p);
  void add(const Partition& p, const RationalExpression& c);
  RationalExpression coeff(const Partition& p) const;
};

// Coefficient of m_lambda in p_mu.
Integer powersum_to_monomial(const Partition& mu, const Partition& lambda);
// Transition matrix: rows p_mu, columns m_lambda, both indexed by partitions_of(n).
const Matrix& p_to_m_matrix(int n);
const Matrix& m_to_p_matrix(int n);

Integer z_lambda(const Partition& lambda);

SymFunc to_powersum(const SymFunc& f);
SymFunc to_monomial(const SymFunc& f);

// (q, t)-deformed Hall pairing on power sums.
RationalExpression hall_pairing(const SymFunc& f, const SymFunc& g);

// Kostka numbers via the bialternant formula: coefficient of x^mu in s_lambda.
Integer kostka(const Partition& lambda, const Partition& mu);

}  // namespace tkh
