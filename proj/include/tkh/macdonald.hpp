#pragma once

#include <string>
#include <vector>

#include "tkh/poly.hpp"
#include "tkh/ratexpr.hpp"
#include "tkh/symfunc.hpp"

namespace tkh {

// (q, s) with s = t^{1/2}; used wherever the Weyl vector appears.
const std::vector<std::string>& half_vars();
// Rewrite a (q, t) expression in (q, s).
RationalExpression to_half(const RationalExpression& e);

inline constexpr int kMacdonaldLimit = 8;

// Monic, dominance-triangular, Hall-orthogonal; returned in the monomial basis.
SymFunc macdonald_poly(const Partition& lambda, int limit = kMacdonaldLimit);
// Closed-form product over boxes of <M_lambda, M_lambda>.
RationalExpression macdonald_norm(const Partition& lambda);

// m_lambda(x_1..x_N) at a monomial alphabet given by exponent vectors in vars.
Poly monomial_symmetric_at(const Partition& lambda, const std::vector<Exp>& alphabet,
                           const std::vector<std::string>& vars);
// M_lambda at x_i = t^{rho_i} q^{mu_i}, rho_i = (N+1-2i)/2, in half_vars().
RationalExpression principal_eval(const Partition& lambda, int N, const Partition& mu);

struct RefinedST {
  std::vector<Partition> index;
  // S relative to S_00; T exact. Entries in half_vars().
  std::vector<std::vector<RationalExpression>> S, T;
};
RefinedST refined_ST(int N, int cutoff);

// Laurent polynomial in x_1..x_N with coefficients Laurent in (q, s).
struct LaurentFunc {
  int N = 1;
  Poly f;
};
std::vector<std::string> laurent_vars(int N);
LaurentFunc laurent_from(int N, const Poly& p);

enum class DLKind { T, Tinv, X, Y };
struct DLLetter {
  DLKind kind;
  int index;  // 1-based
};
// Letters are applied in the order given: word[0] acts first.
LaurentFunc dl_apply(const std::vector<DLLetter>& word, const LaurentFunc& f);
std::vector<DLLetter> parse_dl_word(const std::string& s);

// Symmetric function in N variables, scaled by the product of its coefficient
// denominators so that it lands in the Laurent ring. `scale` receives that
// factor (in half_vars()).
LaurentFunc symmetric_to_laurent(const SymFunc& f, int N, RationalExpression* scale);

// x_i -> t^{-rho_i}; result in half_vars().
Poly evaluation_sub(const LaurentFunc& f);

}  // namespace tkh
