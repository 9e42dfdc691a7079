#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tkh/poly.hpp"

namespace tkh {

// (a, q or Q, t_r, t_c)
using Quad = std::array<int, 4>;

const std::vector<std::string>& tilde_vars();  // a, Q, tr, tc
const std::vector<std::string>& plain_vars();  // a, q, tr, tc

/**
 * Generators of a quadruply-graded homology colored by the rectangle (r^rho),
 * rho rows of length r. Stored as a multiset, so symmetry checks are
 * bijections rather than polynomial identities.
 */
struct QuadGradedSpace {
  int r = 1, rho = 1;
  bool tilde = true;
  std::map<Quad, int> gens;

  int dimension() const;
  Poly poincare() const;
  // Coefficients must be positive integers (GradingError otherwise).
  static QuadGradedSpace from_poincare(const Poly& p, int r, int rho, bool tilde);
  // Triply graded (a, q, t) data with t_r = t_c = t.
  static QuadGradedSpace uncolored(const Poly& p_aqt);
};

enum class RegradeDirection { to_tilde, to_plain };
QuadGradedSpace regrade(const QuadGradedSpace& s, RegradeDirection dir);

struct VerifyReport {
  std::string property;
  bool pass = false;
  std::vector<std::string> offending;
  std::optional<Rational> delta;  // thin: the common delta
};

VerifyReport verify_self_symmetry(const QuadGradedSpace& s);
// s colored by (r^rho) against other colored by (rho^r), t_r and t_c swapped.
VerifyReport verify_mirror(const QuadGradedSpace& s, const QuadGradedSpace& other);
// P(t_c = 1) == base(t_c = 1)^r.
VerifyReport verify_growth(const QuadGradedSpace& s, const QuadGradedSpace& base);
VerifyReport verify_thin(const QuadGradedSpace& s);

Rational delta_grading(const Quad& g, bool tilde);

// Q = q, t_r = -1/q, t_c = q; result in (a, q).
Poly decategorify(const QuadGradedSpace& s);
Poly decategorify_poly(const Poly& p_tilde);

// (x; b)_k = prod_{i<k} (1 - x b^i).
Poly pochhammer(const Poly& x, const Poly& b, int k);
// Gaussian binomial [r, k] in a monomial base b.
Poly gaussian_binomial(int r, int k, const Poly& b);

enum class KnotId { k6_2, k6_3 };
KnotId parse_knot_id(const std::string& s);
std::string knot_id_str(KnotId k);
// Closed quadruple sums over r >= k >= j >= i >= 0.
Poly colored_superpoly_62_63_poly(KnotId knot, int r);
QuadGradedSpace colored_superpoly_62_63(KnotId knot, int r);
// Printed uncolored (a, q, t) superpolynomials.
Poly uncolored_62_63(KnotId knot);

struct CyclotomicData {
  std::string knot;
  Poly prefactor;        // M, applied as M^r
  std::vector<Poly> C;   // C_0 = 1, C_1, ...
  // Other admissible prefactors differ by powers of -a^2 Q^2 t_r^3 t_c^3;
  // the representative with a-degree zero is chosen.
  std::string prefactor_note;
};

// values: (r, tilde Poincare polynomial) for r = 0..R.
CyclotomicData cyclotomic_extract(const std::string& knot, const std::vector<std::pair<int, Poly>>& values);
// M^r sum_{k <= min(r, K)} C_k t_c^{-2rk} (-a^2 Q^2 t_r^3 t_c^{2r+1}; t_c^2)_k [r k]_{t_c^2}.
Poly cyclotomic_predict(const CyclotomicData& c, int r);

// Checks a color-r value against coefficients known for k < r. The terms
// k < r are fixed by c; the remainder must be divisible by the top Pochhammer
// factor, and the quotient is the next coefficient C_r.
struct PredictionReport {
  int r = 0;
  bool consistent = false;
  Poly residual;  // P_r / M^r minus the known terms
  Poly next_C;    // valid when consistent
};
PredictionReport cyclotomic_check_next(const CyclotomicData& c, int r, const Poly& value);

struct DivisibilityReport {
  int N = 0, k = 0;
  bool divisible = false;
  Poly value;     // C_k(a = q^N, q)
  Poly quotient;  // valid when divisible
};
DivisibilityReport divisibility_check(const CyclotomicData& c, int N, int k);

// Printed data: uncolored trefoil (a, q, t), and its (2)-colored plain and tilde
// quadruply graded Poincare polynomials.
Poly trefoil_uncolored();
Poly trefoil_quad31();
Poly trefoil_tilquad31();

}  // namespace tkh
