#include <catch_amalgamated.hpp>

#include <set>

#include "tkh/crosscheck.hpp"
#include "tkh/errors.hpp"
#include "tkh/koszul.hpp"
#include "tkh/registry.hpp"

using namespace tkh;

namespace {

Rational binom(const Rational& alpha, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (alpha - i) / (i + 1);
  return r;
}

long ibinom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Oracle: [z^N] sum_k binom(alpha, k) U^k with U = sum u_i z^i, by weighted degree.
Poly potential_oracle(const std::vector<std::string>& vars, const Rational& alpha, int N) {
  Poly U(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Exp e(vars.size(), 0);
    e[i] = 1;
    U.add_term(e, 1);
  }
  Poly out(vars), Uk = Poly::constant(vars, 1);
  for (int k = 0; k <= N; ++k) {
    for (const auto& [e, c] : Uk.terms()) {
      int w = 0;
      for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
      if (w == N) out.add_term(e, binom(alpha, k) * c);
    }
    Uk *= U;
  }
  return out;
}

}  // namespace

TEST_CASE("potential agrees with the binomial-series oracle") {
  for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 3, 2}, {3, 4, 1}, {2, 5, 1}, {4, 3, 1}}) {
    INFO(m << "," << n << " r=" << r);
    Poly W = potential(TorusKnot(m, n), r);
    int mp = std::min(m, n);
    REQUIRE(static_cast<int>(W.nvars()) == mp * r);
    CHECK(W == potential_oracle(W.vars(), Rational(m + n, mp), (m + n) * r + 1));
  }
  CHECK_THROWS_AS(potential(TorusKnot(2, 3), 0), InputError);
}

TEST_CASE("trefoil relations") {
  auto rel = moduli_relations(TorusKnot(2, 3), 1, true);
  // Only dW/du2 survives u1 = 0, with one even and one odd relation.
  CHECK(rel.even.size() == 1);
  CHECK(rel.odd.size() == 1);
  auto full = moduli_relations(TorusKnot(2, 3), 1, false);
  CHECK(full.even.size() == 2);
}

TEST_CASE("reduced quotient dimensions") {
  CHECK(QuotientModel::build(moduli_relations(TorusKnot(2, 3), 1, true)).basis().size() == 3);
  CHECK(QuotientModel::build(moduli_relations(TorusKnot(2, 5), 1, true)).basis().size() == 5);
  CHECK(QuotientModel::build(moduli_relations(TorusKnot(3, 4), 1, true)).basis().size() == 11);
}

TEST_CASE("trefoil basis gradings and Poincare polynomial") {
  auto rel = moduli_relations(TorusKnot(2, 3), 1, true);
  auto model = QuotientModel::build(rel);
  std::vector<std::string> names;
  for (const auto& b : model.basis()) names.push_back(model.ring().str(b.mono));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"1", "u2", "xi2"});
  Poly P = model.poincare();
  const auto& v = P.vars();
  CHECK(P == Poly::constant(v, 1) + Poly::monomial(v, {2, 2, 3, 3}) + Poly::monomial(v, {0, 4, 2, 2}));
  for (const auto& b : model.basis()) CHECK_FALSE(model.in_ideal(SuperRingElement::monomial(b.mono)));
  for (const auto& e : rel.even) CHECK(model.in_ideal(e));
  for (const auto& e : rel.odd) CHECK(model.in_ideal(e));
}

TEST_CASE("differentials on the trefoil") {
  auto rel = moduli_relations(TorusKnot(2, 3), 1, true);
  auto model = QuotientModel::build(rel);
  for (int N : {-1, 0, 1, 2}) {
    auto h = apply_differential(model, parse_differential("dN:" + std::to_string(N), 1), rel);
    CHECK(h.d_squared_zero);
    CHECK(h.dimension == 3);
    CHECK(h.homology == h.dimension - 2 * h.rank);
  }
  CHECK(apply_differential(model, parse_differential("dN:1", 1), rel).homology == 1);
  CHECK_THROWS_AS(parse_differential("dN", 1), InputError);
  CHECK_THROWS_AS(parse_differential("colored+:2", 2), InputError);
  CHECK_THROWS_AS(parse_differential("dX:1", 1), InputError);
}

TEST_CASE("Jacobi ring dimensions of the sl(N) potentials") {
  CHECK(jacobi_dim(slN_potential(3, 2, PotentialKind::sym)) == 6);
  CHECK(jacobi_dim(slN_potential(4, 2, PotentialKind::antisym)) == 6);
  for (int N = 1; N <= 5; ++N) CHECK(jacobi_dim(slN_potential(N, 1, PotentialKind::sym)) == N);
  for (int N = 2; N <= 4; ++N)
    for (int r = 1; r <= 3; ++r) {
      INFO("N=" << N << " r=" << r);
      CHECK(jacobi_dim(slN_potential(N, r, PotentialKind::sym)) == ibinom(N + r - 1, r));
      if (r <= N) CHECK(jacobi_dim(slN_potential(N, r, PotentialKind::antisym)) == ibinom(N, r));
    }
}

TEST_CASE("unreduced unknot is infinite") {
  auto rel = moduli_relations(TorusKnot(1, 1), 1, false);
  CHECK_THROWS_AS(QuotientModel::build(rel, -1, 40), FinitenessError);
  auto model = QuotientModel::build(rel, 10);
  CHECK(model.truncated());
  CHECK(model.max_q() == 10);
  SuperMonomial big = model.ring().one();
  big.u[0] = 20;
  CHECK_THROWS_AS(model.normal_form(SuperRingElement::monomial(big)), CutoffError);
  CHECK_THROWS_AS(apply_differential(model, parse_differential("dN:1", 1), rel), CutoffError);
}

TEST_CASE("finiteness is proven just above the top degree") {
  auto model = QuotientModel::build(moduli_relations(TorusKnot(5, 6), 1, true));
  CHECK(model.basis().size() == 197);
  CHECK_FALSE(model.truncated());
  int top = 0;
  for (const auto& b : model.basis()) top = std::max(top, b.deg.q);
  CHECK(model.max_q() <= top + 10);
}

TEST_CASE("basis gradings follow the t_c filtration") {
  // Relations mix t_c-degrees for m' >= 3, e.g. (2/9) u2^3 - u3^2 for T(3,4).
  auto rel = moduli_relations(TorusKnot(4, 5), 1, true);
  bool mixed = false;
  for (const auto& e : rel.even) {
    std::set<int> tcs;
    for (const auto& [m, c] : e.terms()) tcs.insert(rel.ring.grading(m).tc);
    mixed = mixed || tcs.size() > 1;
  }
  CHECK(mixed);
  // With t_c-first column order the graded dimensions match the tableau sum.
  Poly kz = koszul_to_homological(QuotientModel::build(rel).poincare());
  Poly dh = specialize_homological(daha_reduced(TorusKnot(4, 5)));
  auto m = monomial_ratio(dh, kz);
  REQUIRE(m.has_value());
  CHECK(*m == Poly::monomial(homological_vars(), {0, 2, -12}));
}

TEST_CASE("colored d+ on the (2)-colored T(3,4) model") {
  auto rel = moduli_relations(TorusKnot(3, 4), 2, true);
  auto model = QuotientModel::build(rel);
  CHECK(model.basis().size() == 121);
  // d+ does not map the relations into the ideal here, and d^2 != 0 on the quotient.
  CHECK_THROWS_AS(apply_differential(model, parse_differential("colored+:1", 2), rel), ModelError);
  auto minus = apply_differential(model, parse_differential("colored-:1", 2), rel);
  CHECK(minus.d_squared_zero);
}
