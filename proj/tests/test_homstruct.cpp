#include <catch_amalgamated.hpp>

#include <random>

#include "tkh/errors.hpp"
#include "tkh/homstruct.hpp"

using namespace tkh;

namespace {

Poly tv(const std::string& name, int k = 1) { return Poly::variable(tilde_vars(), name, k); }

// Oracle: q-Pascal rule [r,k] = [r-1,k-1] + b^k [r-1,k].
Poly qbinom_oracle(int r, int k, const Poly& b) {
  const auto& v = b.vars();
  if (k < 0 || k > r) return Poly(v);
  if (k == 0 || k == r) return Poly::constant(v, 1);
  return qbinom_oracle(r - 1, k - 1, b) + b.pow(static_cast<unsigned>(k)) * qbinom_oracle(r - 1, k, b);
}

QuadGradedSpace random_space(std::mt19937& g, bool tilde) {
  std::uniform_int_distribution<int> d(-6, 6), mult(1, 3);
  QuadGradedSpace s;
  s.r = 2;
  s.tilde = tilde;
  for (int i = 0; i < 6; ++i) s.gens[Quad{2 * d(g), d(g), d(g), d(g)}] += mult(g);
  return s;
}

}  // namespace

TEST_CASE("regrading round trips") {
  std::mt19937 g(5);
  for (int i = 0; i < 30; ++i) {
    QuadGradedSpace s = random_space(g, false);
    QuadGradedSpace t = regrade(s, RegradeDirection::to_tilde);
    CHECK(t.tilde);
    CHECK(t.dimension() == s.dimension());
    CHECK(regrade(t, RegradeDirection::to_plain).gens == s.gens);
  }
  auto plain = QuadGradedSpace::from_poincare(trefoil_quad31(), 2, 1, false);
  CHECK(regrade(plain, RegradeDirection::to_tilde).poincare() == trefoil_tilquad31());
}

TEST_CASE("from_poincare rejects non-integral data") {
  Poly p = Poly::constant(tilde_vars(), Rational(1, 2));
  CHECK_THROWS_AS(QuadGradedSpace::from_poincare(p, 1, 1, true), GradingError);
  CHECK_THROWS_AS(QuadGradedSpace::from_poincare(-Poly::constant(tilde_vars(), 1), 1, 1, true), GradingError);
}

TEST_CASE("structural checks on the trefoil") {
  auto base = QuadGradedSpace::uncolored(trefoil_uncolored());
  auto tilde = QuadGradedSpace::from_poincare(trefoil_tilquad31(), 2, 1, true);
  CHECK(verify_self_symmetry(tilde).pass);
  CHECK(verify_growth(tilde, base).pass);
  auto thin = verify_thin(base);
  CHECK(thin.pass);
  REQUIRE(thin.delta.has_value());
  CHECK(*thin.delta == 1);
  // Colored delta is r times the uncolored one.
  CHECK(*verify_thin(tilde).delta == 2);
  CHECK(verify_mirror(base, base).pass);
}

TEST_CASE("broken data fails the checks") {
  auto tilde = QuadGradedSpace::from_poincare(trefoil_tilquad31(), 2, 1, true);
  tilde.gens[Quad{4, 2, 3, 5}] += 1;
  CHECK_FALSE(verify_self_symmetry(tilde).pass);
  CHECK_FALSE(verify_growth(tilde, QuadGradedSpace::uncolored(trefoil_uncolored())).pass);
  QuadGradedSpace thick = QuadGradedSpace::from_poincare(
      Poly::constant(tilde_vars(), 1) + Poly::monomial(tilde_vars(), {2, 2, 0, 0}), 1, 1, true);
  auto rep = verify_thin(thick);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.offending.empty());
}

TEST_CASE("decategorification") {
  auto tilde = QuadGradedSpace::from_poincare(trefoil_tilquad31(), 2, 1, true);
  CHECK(decategorify(tilde) == decategorify_poly(trefoil_tilquad31()));
  auto base = QuadGradedSpace::uncolored(trefoil_uncolored());
  Poly h = decategorify(base);
  CHECK(h.vars() == std::vector<std::string>{"a", "q"});
  // Uncolored trefoil HOMFLY (a^2 q^-2 + a^2 q^2 - a^4).
  Poly want = Poly::monomial(h.vars(), {2, -2}) + Poly::monomial(h.vars(), {2, 2}) - Poly::monomial(h.vars(), {4, 0});
  CHECK(h == want);
}

TEST_CASE("Pochhammer and Gaussian binomials") {
  Poly x = tv("a"), b = tv("tc", 2), one = Poly::constant(tilde_vars(), 1);
  CHECK(pochhammer(x, b, 0) == one);
  CHECK(pochhammer(x, b, 2) == (one - x) * (one - x * b));
  for (int r = 0; r <= 6; ++r)
    for (int k = 0; k <= r; ++k) CHECK(gaussian_binomial(r, k, b) == qbinom_oracle(r, k, b));
}

TEST_CASE("6_2 and 6_3 colored data") {
  CHECK(parse_knot_id("6_2") == KnotId::k6_2);
  CHECK(knot_id_str(parse_knot_id("63")) == "6_3");
  CHECK_THROWS_AS(parse_knot_id("7_1"), InputError);
  for (KnotId id : {KnotId::k6_2, KnotId::k6_3}) {
    Poly r1 = colored_superpoly_62_63_poly(id, 1);
    CHECK(r1 == QuadGradedSpace::uncolored(uncolored_62_63(id)).poincare());
    CHECK(colored_superpoly_62_63_poly(id, 0) == Poly::constant(tilde_vars(), 1));
    auto s2 = colored_superpoly_62_63(id, 2);
    CHECK(verify_self_symmetry(s2).pass);
    CHECK(verify_growth(s2, colored_superpoly_62_63(id, 1)).pass);
  }
}

TEST_CASE("cyclotomic coefficients") {
  for (KnotId id : {KnotId::k6_2, KnotId::k6_3}) {
    std::vector<std::pair<int, Poly>> vals;
    for (int r = 0; r <= 2; ++r) vals.emplace_back(r, colored_superpoly_62_63_poly(id, r));
    CyclotomicData c = cyclotomic_extract(knot_id_str(id), vals);
    REQUIRE(c.C.size() == 3);
    for (int r = 0; r <= 2; ++r) CHECK(cyclotomic_predict(c, r) == vals[static_cast<std::size_t>(r)].second);
    auto next = cyclotomic_check_next(c, 3, colored_superpoly_62_63_poly(id, 3));
    CHECK(next.consistent);
    auto bad = cyclotomic_check_next(c, 3, colored_superpoly_62_63_poly(id, 3) + tv("tc"));
    CHECK_FALSE(bad.consistent);
    if (id == KnotId::k6_2) CHECK(c.prefactor == -tv("tr", -1) * tv("tc", -1));
    else CHECK(c.prefactor == Poly::constant(tilde_vars(), 1));
  }
}

TEST_CASE("unknot has vanishing cyclotomic coefficients") {
  Poly one = Poly::constant(tilde_vars(), 1);
  CyclotomicData c = cyclotomic_extract("unknot", {{0, one}, {1, one}, {2, one}});
  CHECK(c.prefactor == one);
  CHECK(c.C[1].is_zero());
  CHECK(c.C[2].is_zero());
}

TEST_CASE("trefoil cyclotomic expansion reproduces the colored data") {
  Poly one = Poly::constant(tilde_vars(), 1);
  Poly r1 = QuadGradedSpace::uncolored(trefoil_uncolored()).poincare();
  CyclotomicData c = cyclotomic_extract("3_1", {{0, one}, {1, r1}, {2, trefoil_tilquad31()}});
  CHECK(c.prefactor == -tv("tr", -1) * tv("tc", -1));
  CHECK_FALSE(c.C[1].is_zero());
  CHECK(cyclotomic_predict(c, 2) == trefoil_tilquad31());
  CHECK(decategorify_poly(cyclotomic_predict(c, 2)) == decategorify_poly(trefoil_tilquad31()));
}

TEST_CASE("non-cyclotomic input is rejected") {
  Poly one = Poly::constant(tilde_vars(), 1);
  CHECK_THROWS_AS(cyclotomic_extract("x", {{0, one}, {1, one + tv("tc")}}), NotCyclotomicError);
  CHECK_THROWS_AS(cyclotomic_extract("x", {{0, one + one}, {1, one}}), NotCyclotomicError);
  CHECK_THROWS_AS(cyclotomic_extract("x", {{1, one}}), InputError);
}

TEST_CASE("divisibility of the coefficients") {
  std::vector<std::pair<int, Poly>> vals;
  for (int r = 0; r <= 3; ++r) vals.emplace_back(r, colored_superpoly_62_63_poly(KnotId::k6_2, r));
  CyclotomicData c = cyclotomic_extract("6_2", vals);
  for (int N = 1; N <= 3; ++N)
    for (int k = 1; k <= 3; ++k) CHECK(divisibility_check(c, N, k).divisible);
}
