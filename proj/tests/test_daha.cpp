#include <catch_amalgamated.hpp>

#include "tkh/daha.hpp"
#include "tkh/errors.hpp"
#include "tkh/tableaux.hpp"

using namespace tkh;

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
  if (e < 0) r = 1 / r;
  return r;
}

// Oracle: the tableau sum written out directly over Q.
Rational oracle(int m, int n, const Rational& a, const Rational& q, const Rational& t) {
  Rational gamma = (t - 1) * (q - 1) / (q - t);
  Rational total = 0;
  for (const Partition& mu : partitions_of(n)) {
    Rational g = 1;
    for (const auto& b : box_stats(mu))
      g *= (1 - power(q, b.arm) * power(t, b.leg + 1)) * (1 - power(q, -b.arm - 1) * power(t, -b.leg));
    Rational shape = power(gamma, n) / g;
    for (const auto& b : box_stats(mu)) {
      Rational x = power(q, -b.col) * power(t, b.row);
      shape *= (q - t * x) * (1 - a / x);
    }
    Rational inner = 0;
    for (const auto& tab : syt_of(mu)) {
      std::vector<Rational> x;
      for (const auto& [r, c] : tab.position) x.push_back(power(q, -c) * power(t, r));
      Rational v = 1;
      for (int i = 0; i < n; ++i) v *= power(x[i], (i + 1) * m / n - i * m / n);
      for (int k = 0; k + 1 < n; ++k) v /= 1 - q * x[k + 1] / (t * x[k]);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          v *= (x[j] - q * x[i]) * (t * x[j] - x[i]) / ((x[j] - x[i]) * (t * x[j] - q * x[i]));
      inner += v;
    }
    total += shape * inner;
  }
  return total * power(t, m - 1);
}

const Rational A(2, 7), QV(3, 5), TV(7, 11);

}  // namespace

TEST_CASE("s_fraction increments sum to m") {
  CHECK(s_fraction(3, 2, 1) == 1);
  CHECK(s_fraction(3, 2, 2) == 2);
  CHECK(s_fraction(2, 3, 1) == 0);
  CHECK(s_fraction(2, 3, 3) == 1);
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n) {
      int s = 0;
      for (int i = 1; i <= n; ++i) s += s_fraction(m, n, i);
      CHECK(s == m);
    }
  CHECK_THROWS_AS(s_fraction(2, 3, 4), IndexError);
}

TEST_CASE("unknot value from the constants") {
  auto c = shape_constants(Partition({1}));
  const auto& v = daha_vars();
  Poly a = Poly::variable(v, "fa"), q = Poly::variable(v, "fq"), t = Poly::variable(v, "ft");
  Poly one = Poly::constant(v, 1);
  RationalExpression expected = c.gamma_tilde * RationalExpression((one - a) * (q - t), c.g_mu);
  Poly value = daha_superpoly(TorusKnot(1, 1)).value;
  CHECK(value == a * q - q);
  CHECK(expected.evaluate({A, QV, TV}) == value.evaluate({A, QV, TV}));
}

TEST_CASE("trefoil matches the direct sum") {
  Poly v = daha_superpoly(TorusKnot(2, 3)).value;
  const auto& d = daha_vars();
  auto mono = [&](int a, int q, int t, int c) { return Poly::monomial(d, {a, q, t}, c); };
  Poly expected = mono(2, 1, 3, -1) + mono(1, 1, 4, 1) + mono(1, 1, 3, 1) + mono(1, 0, 3, 1) +
                  mono(0, 1, 4, -1) + mono(0, 0, 3, -1);
  CHECK(v == expected);
  CHECK(v.evaluate({A, QV, TV}) == oracle(2, 3, A, QV, TV));
}

TEST_CASE("symbolic and point backends agree with the oracle") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {2, 5}, {3, 4}, {4, 3}, {3, 5}}) {
    INFO("T(" << m << "," << n << ")");
    Rational o = oracle(m, n, A, QV, TV);
    CHECK(daha_at_point(TorusKnot(m, n), A, QV, TV) == o);
    CHECK(daha_superpoly(TorusKnot(m, n)).value.evaluate({A, QV, TV}) == o);
  }
}

TEST_CASE("symmetry under swapping m and n") {
  CHECK(daha_superpoly(TorusKnot(2, 5)).value == daha_superpoly(TorusKnot(5, 2)).value);
  CHECK(daha_superpoly(TorusKnot(3, 4)).value == daha_superpoly(TorusKnot(4, 3)).value);
  CHECK(daha_at_point(TorusKnot(5, 6), A, QV, TV) == daha_at_point(TorusKnot(6, 5), A, QV, TV));
}

TEST_CASE("reduced trefoil") {
  const auto& d = daha_vars();
  Poly expected = Poly::monomial(d, {1, 0, 3}, -1) + Poly::monomial(d, {0, 0, 4}) + Poly::monomial(d, {0, -1, 3});
  CHECK(daha_reduced(TorusKnot(2, 3)) == expected);
}

TEST_CASE("homological change of variables") {
  const auto& d = daha_vars();
  Poly p = Poly::monomial(d, {1, 1, 1});
  CHECK(specialize_homological(p) == Poly::monomial(homological_vars(), {2, 4, 3}, -1));
}

TEST_CASE("reduced superpolynomials are positive in homological variables") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    Poly h = specialize_homological(daha_reduced(TorusKnot(m, n)));
    for (const auto& [e, c] : h.terms()) CHECK(c > 0);
  }
}

TEST_CASE("sl(N) specialization sets a = t^N") {
  Poly v = daha_superpoly(TorusKnot(1, 1)).value;
  const auto& d = daha_vars();
  Poly s2 = specialize_slN(v, 2);
  CHECK(s2 == Poly::monomial(d, {0, 1, 2}) - Poly::monomial(d, {0, 1, 0}));
  Poly tref = daha_superpoly(TorusKnot(2, 3)).value;
  for (int N = 1; N <= 3; ++N)
    CHECK(specialize_slN(tref, N).evaluate({Rational(0), QV, TV}) == tref.evaluate({power(TV, N), QV, TV}));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(TorusKnot(2, 4), InputError);
  CHECK_THROWS_AS(TorusKnot(0, 3), InputError);
  CHECK_THROWS_AS(daha_superpoly(TorusKnot(2, 9)), ScaleError);
}
