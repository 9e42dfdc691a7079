#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tkh/daha.hpp"
#include "tkh/linalg.hpp"
#include "tkh/poly.hpp"
#include "tkh/superring.hpp"

namespace tkh {

// Coef_{(m+n)r+1} of (1 + u_1 z + ... + u_{m'r} z^{m'r})^{(m+n)/m'}, m' = min(m, n).
Poly potential(const TorusKnot& k, int r);

struct ModuliRelations {
  SuperRing ring;
  std::vector<SuperRingElement> even;
  std::vector<SuperRingElement> odd;
};

// Jacobi relations of the super potential; reduced sets u_1..u_r = 0 after
// differentiating and drops xi_1..xi_r.
ModuliRelations moduli_relations(const TorusKnot& k, int r, bool reduced);
// Reduced relations from matching coefficients of (1 + sum u_i z^i)^{n/m}
// against a v-series of length n r (m <= n after swapping), plus their differentials.
ModuliRelations coefficient_matching_relations(const TorusKnot& k, int r);

struct BasisElement {
  SuperMonomial mono;
  Grading deg;
};

/**
 * Quotient of the super ring by the ideal generated by the relations, split
 * into components of fixed (q-degree, number of xi's). Each component is
 * reduced by row echelon form with columns sorted by descending t_c, then
 * descending term order; the non-pivot monomials form the basis. Since the
 * relations only respect the t_c filtration, the basis gradings are those of
 * the associated graded.
 */
class QuotientModel {
 public:
  // q_cutoff < 0: stop once finiteness is proven, FinitenessError after the
  // hard limit. q_cutoff >= 0: enumerate up to that q-degree (truncated if
  // the quotient continues).
  static QuotientModel build(const ModuliRelations& rel, int q_cutoff = -1, int hard_limit = 400);

  const SuperRing& ring() const { return ring_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  bool truncated() const { return truncated_; }
  int max_q() const { return max_q_; }
  // Coordinates in the basis; zero for components above the proven bound.
  std::vector<Rational> normal_form(const SuperRingElement& e) const;
  // Is e zero in the quotient?
  bool in_ideal(const SuperRingElement& e) const;
  // Poincare polynomial in (a, q, tr, tc).
  Poly poincare() const;
  // Dimension per (a, q).
  std::map<std::pair<int, int>, int> bidegree_dims() const;

 private:
  struct Component {
    std::vector<SuperMonomial> monos;  // descending (t_c, term order)
    Matrix rref;                       // rows = independent ideal elements
    std::vector<std::size_t> pivots;
    std::vector<int> basis_index;      // per column: index into basis_, or -1
  };
  using Key = std::pair<int, int>;  // (q, xi count)

  SuperRing ring_;
  std::map<Key, Component> comps_;
  std::vector<BasisElement> basis_;
  bool truncated_ = false;
  int max_q_ = 0;
};

enum class DiffKind { dN, colored_plus, colored_minus };

struct Differential {
  DiffKind kind = DiffKind::dN;
  int param = 0;  // N for dN, k for the colored ones
  int color = 1;  // r of the model
  std::string str() const;
};
Differential parse_differential(const std::string& spec, int color);
// Image of xi_i as an even element.
SuperRingElement differential_on_xi(const SuperRing& ring, const Differential& d, int i);

struct HomologyReport {
  int dimension = 0;
  int rank = 0;
  int homology = 0;
  bool d_squared_zero = true;
  // Whether d maps the relations back into the ideal; the monomial-basis
  // complex is used either way.
  bool ideal_preserved = true;
  std::map<std::pair<int, int>, int> by_bidegree;  // (a, q) of the source
};
HomologyReport apply_differential(const QuotientModel& model, const Differential& d, const ModuliRelations& rel);

enum class PotentialKind { sym, antisym };
// W_{sl(N),(r)} or W_{sl(N),(1^r)} in u1..ur.
Poly slN_potential(int N, int r, PotentialKind kind);
// dim Q[u]/(dW/du_i), with u_i of weight i.
int jacobi_dim(const Poly& W);

}  // namespace tkh
