#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tkh/daha.hpp"
#include "tkh/poly.hpp"
#include "tkh/rational.hpp"

namespace tkh {

// Numerical semigroup generated by coprime m, n.
struct Semigroup {
  int m = 1, n = 1;
  std::vector<int> gaps;  // sorted non-elements
  int milnor = 0;         // (m-1)(n-1)

  bool contains(int x) const;
  // Largest gap, -1 when there is none.
  int frobenius() const { return gaps.empty() ? -1 : gaps.back(); }
};

Semigroup semigroup(int m, int n);

/**
 * Co-finite ideal of a semigroup, stored as the sorted list of semigroup
 * elements it misses.
 */
struct SemigroupIdeal {
  std::vector<int> missing;

  int colength() const { return static_cast<int>(missing.size()); }
  bool contains(const Semigroup& S, int x) const;
  // Elements of the ideal outside ideal + (S \ {0}).
  std::vector<int> minimal_generators(const Semigroup& S) const;

  friend bool operator<(const SemigroupIdeal& a, const SemigroupIdeal& b) { return a.missing < b.missing; }
  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) { return a.missing == b.missing; }
};

std::vector<SemigroupIdeal> ideals_of_colength(const Semigroup& S, int l);
// Pairs I ⊃ J ⊃ m I with colength(I) = l and colength(J) = l + jump.
Integer nested_count(const Semigroup& S, int l, int jump);

// (l, jump) -> number of nested pairs.
using HilbTable = std::map<std::pair<int, int>, Integer>;
HilbTable hilb_table(const Semigroup& S, int max_l);

/**
 * Unreduced HOMFLY series in (a, q) from torus-fixed point counts:
 * (a/q)^{mu-1} sum q^{2l} (-a^2)^jump count(l, jump), for 2l <= q_order.
 */
Poly os_homfly(const TorusKnot& k, int q_order);
// Truncated series of the unknot value (q/a)(1 - a^2)/(1 - q^2).
Poly unknot_series(int q_order);
// os_homfly divided by the unknot series. Exact when q_order is large enough
// for the polynomial to close up; throws CutoffError otherwise.
Poly os_reduced(const TorusKnot& k, int q_order);
int default_q_order(const TorusKnot& k);

// prod_{i>0} (1 - a^2 q^{2i})^{-i} up to q^{q_order}.
Poly pt_partition_function(int q_order);
// Z(a, q) times sum (-a^2)^r q^{2l} count(l, r), up to q^{q_order}.
Poly pt_left_side(const TorusKnot& k, int q_order);

}  // namespace tkh
