#include <catch_amalgamated.hpp>

#include "tkh/errors.hpp"
#include "tkh/macdonald.hpp"

using namespace tkh;

namespace {

const Rational QV(3, 5), TV(7, 11), SV(2, 3);

Rational at(const RationalExpression& e) { return e.evaluate({QV, TV}); }
Rational at_half(const RationalExpression& e) { return e.evaluate({QV, SV}); }

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
  return e < 0 ? 1 / r : r;
}

// Oracle: prod over boxes of (1 - q^{a+1} t^l) / (1 - q^a t^{l+1}).
Rational norm_oracle(const Partition& l) {
  Rational r = 1;
  for (const auto& b : box_stats(l))
    r *= (1 - power(QV, b.arm + 1) * power(TV, b.leg)) / (1 - power(QV, b.arm) * power(TV, b.leg + 1));
  return r;
}

}  // namespace

TEST_CASE("Hall pairing of p1 with itself") {
  SymFunc p1 = SymFunc::basis_element(SymBasis::powersum, Partition({1}));
  CHECK(at(hall_pairing(p1, p1)) == (1 - QV) / (1 - TV));
}

TEST_CASE("M_(2) in the monomial basis") {
  SymFunc M = macdonald_poly(Partition({2}));
  CHECK(at(M.coeff(Partition({2}))) == 1);
  CHECK(at(M.coeff(Partition({1, 1}))) == (1 + QV) * (1 - TV) / (1 - QV * TV));
  SymFunc e2 = macdonald_poly(Partition({1, 1}));
  CHECK(at(e2.coeff(Partition({1, 1}))) == 1);
  CHECK(e2.coeff(Partition({2})).is_zero());
}

TEST_CASE("Macdonald polynomials are orthogonal with the product-formula norms") {
  for (int n = 1; n <= 4; ++n) {
    auto ps = partitions_of(n);
    std::vector<SymFunc> Ms;
    for (const auto& l : ps) Ms.push_back(macdonald_poly(l));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(at(macdonald_norm(ps[i])) == norm_oracle(ps[i]));
      CHECK(at(hall_pairing(Ms[i], Ms[i])) == norm_oracle(ps[i]));
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK(hall_pairing(Ms[i], Ms[j]).is_zero());
    }
  }
}

TEST_CASE("triangularity in dominance order") {
  for (const auto& l : partitions_of(4)) {
    SymFunc M = macdonald_poly(l);
    for (const auto& [nu, c] : M.coords)
      if (!c.is_zero()) CHECK(l.dominates(nu));
  }
}

TEST_CASE("principal evaluation of M_(1)") {
  CHECK(at_half(principal_eval(Partition({1}), 2, Partition())) == SV + 1 / SV);
  CHECK(at_half(principal_eval(Partition({1}), 2, Partition({1}))) == QV * SV + 1 / SV);
  CHECK(principal_eval(Partition({1, 1, 1}), 2, Partition()).is_zero());
  CHECK_THROWS_AS(principal_eval(Partition({1}), 1, Partition({1, 1})), InputError);
}

TEST_CASE("S is symmetric and T is a diagonal of monomials") {
  RefinedST st = refined_ST(2, 2);
  const std::size_t k = st.index.size();
  REQUIRE(k == 6);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(equal(st.S[i][j], st.S[j][i]));
      if (i != j) CHECK(st.T[i][j].is_zero());
    }
  for (std::size_t i = 0; i < k; ++i) {
    const Partition& l = st.index[i];
    if (l == Partition({2})) CHECK(at_half(st.T[i][i]) == QV);
    if (l == Partition({1, 1})) CHECK(at_half(st.T[i][i]) == SV * SV);
    if (l == Partition({1})) CHECK(at_half(st.T[i][i]) == 1);
  }
}

TEST_CASE("Laurent image evaluates to the principal specialization") {
  for (int N = 1; N <= 3; ++N)
    for (const auto& l : partitions_of(3)) {
      if (l.length() > N) continue;
      RationalExpression scale;
      LaurentFunc F = symmetric_to_laurent(macdonald_poly(l), N, &scale);
      Rational v = evaluation_sub(F).evaluate({QV, SV}) / at_half(scale);
      CHECK(v == at_half(principal_eval(l, N, Partition())));
    }
}

TEST_CASE("Demazure-Lusztig operators") {
  const int N = 3;
  auto lv = laurent_vars(N);
  Poly p = Poly::monomial(lv, {2, -1, 0, 0, 0}, 3) + Poly::monomial(lv, {0, 1, 1, 0, 0}, -1);
  LaurentFunc f = laurent_from(N, p);
  auto w = [&](const std::string& s) { return dl_apply(parse_dl_word(s), f).f; };
  CHECK(w("T1 T2 T1") == w("T2 T1 T2"));
  CHECK(w("T2 T2^-1") == p);
  Poly s = Poly::variable(lv, "fs"), sinv = Poly::variable(lv, "fs", -1);
  CHECK(w("T2 T2") == (s - sinv) * w("T2") + p);
  CHECK(w("X1") == Poly::variable(lv, "x1") * p);
  CHECK(w("Y1 Y3") == w("Y3 Y1"));
  // A symmetric function is a T_i eigenvector with eigenvalue s.
  Poly e1 = Poly::variable(lv, "x1") + Poly::variable(lv, "x2") + Poly::variable(lv, "x3");
  CHECK(dl_apply(parse_dl_word("T1"), laurent_from(N, e1)).f == s * e1);
  CHECK_THROWS_AS(parse_dl_word("Z1"), InputError);
  CHECK_THROWS_AS(w("T3"), IndexError);
}

TEST_CASE("evaluation substitution") {
  auto lv = laurent_vars(2);
  LaurentFunc f{2, Poly::variable(lv, "x1")};
  CHECK(evaluation_sub(f) == Poly::variable(half_vars(), "fs", -1));
}
