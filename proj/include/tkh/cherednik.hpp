#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkh/linalg.hpp"
#include "tkh/poly.hpp"

namespace tkh {

// Variables x1..xn.
std::vector<std::string> x_vars(int n);

// D_i f = df/dx_i + c sum_{j != i} (s_ij f - f)/(x_i - x_j).
Poly dunkl_apply(const Rational& c, int n, int i, const Poly& f);
// Permutation action: x_k -> x_{perm[k-1]}.
Poly permute(const Poly& f, const std::vector<int>& perm);

// Monomial basis of the degree-d slice: monomials in x_i (full) or in
// u_k = x_k - x_{k+1} (reduced), expanded in x.
std::vector<Poly> slice_basis(int n, int degree, bool reduced);
// (f, g) = [f(D) g](0) for homogeneous f, g of equal degree.
Rational contravariant_pairing(const Rational& c, int n, const Poly& f, const Poly& g);
Matrix contravariant_gram(const Rational& c, int n, int degree, bool reduced);

struct DegreeCharacter {
  int degree = 0;
  int q_degree = 0;  // 2 degree - (m-1)(n-1)
  int dimension = 0;
  std::vector<int> mult;  // multiplicity of Lambda^i C^{n-1}, i = 0..n-1
  int other = 0;          // dimension in non-hook isotypes
};

struct GradedCharacter {
  int m = 0, n = 0;
  std::vector<DegreeCharacter> degrees;  // nonzero degrees only
  int total = 0;
};

inline constexpr int kCherednikMaxN = 4;

// Character of the reduced irreducible quotient L_{m/n}, c = m/n.
GradedCharacter irreducible_character(int m, int n, int d_max);

struct FiltrationEntry {
  std::string element;  // u-monomial representative
  int degree = 0;
  int lower_index = 0;  // largest i with the element in F_i
  int upper_index = 0;  // smallest i with the element in F^i = (F_i)^perp
  std::optional<int> isotype;           // n = 2 only
  std::optional<Rational> stated_index;  // n = 2: (m-1)/2 on e_0, (m-3)/2 on e_1
};

// F_i L = sum_j (m^i ∩ sum_{k < 2j - i} L(k)) with L(k) the h-graded pieces,
// evaluated on degree blocks.
std::vector<FiltrationEntry> filtration_grading(int m, int n);

struct QuasisReport {
  int m = 0, n = 0, q_order = 0;
  Poly lhs;  // sum_i (-a^2)^i Tr(q^h, e_i Lbar), e_i projecting onto Lambda^i C^n
  Poly rhs;  // os_homfly
  Poly monomial;  // rhs = monomial * lhs on the common window
  bool matches = false;
};

// Throws ConsistencyError when the ratio is not a monomial.
QuasisReport check_quasis(int m, int n, int q_order);

}  // namespace tkh
