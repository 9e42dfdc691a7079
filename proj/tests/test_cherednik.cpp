#include <catch_amalgamated.hpp>

#include "tkh/cherednik.hpp"
#include "tkh/errors.hpp"

using namespace tkh;

namespace {

Poly xv(int n, int i) { return Poly::variable(x_vars(n), "x" + std::to_string(i)); }

std::vector<int> transposition(int n, int i, int j) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k + 1;
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return p;
}

}  // namespace

TEST_CASE("Dunkl operator on powers of x1 - x2") {
  const Rational c(3, 7);
  Poly u = xv(2, 1) - xv(2, 2);
  for (unsigned m = 1; m <= 6; ++m) {
    Poly got = dunkl_apply(c, 2, 1, u.pow(m));
    Rational k = m % 2 ? Rational(m) - 2 * c : Rational(m);
    CHECK(got == k * u.pow(m - 1));
  }
}

TEST_CASE("Dunkl operators commute") {
  const Rational c(2, 5);
  const int n = 3;
  Poly f = xv(n, 1).pow(3) * xv(n, 2) + xv(n, 3).pow(2) * xv(n, 1) * Rational(-4) + xv(n, 2).pow(4);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      CHECK(dunkl_apply(c, n, i, dunkl_apply(c, n, j, f)) == dunkl_apply(c, n, j, dunkl_apply(c, n, i, f)));
}

TEST_CASE("commutator of a Dunkl operator with a coordinate") {
  const Rational c(5, 3);
  const int n = 3;
  Poly f = xv(n, 1).pow(2) * xv(n, 3) - xv(n, 2) * Rational(7) + xv(n, 3).pow(3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Poly comm = dunkl_apply(c, n, j, xv(n, i) * f) - xv(n, i) * dunkl_apply(c, n, j, f);
      if (i != j) {
        CHECK(comm == c * permute(f, transposition(n, i, j)));
      } else {
        Poly want = f;
        for (int k = 1; k <= n; ++k)
          if (k != i) want -= c * permute(f, transposition(n, i, k));
        CHECK(comm == want);
      }
    }
}

TEST_CASE("contravariant form degenerates at c = m/2 in degree m") {
  for (int m : {1, 3, 5}) {
    Rational c(m, 2);
    c.canonicalize();
    for (int d = 0; d <= m; ++d) {
      Rational det = determinant(contravariant_gram(c, 2, d, true));
      if (d < m) CHECK(det != 0);
      else CHECK(det == 0);
    }
  }
}

TEST_CASE("contravariant form is nondegenerate at c = 1/3 for n = 2") {
  for (int d = 0; d <= 6; ++d) CHECK(determinant(contravariant_gram(Rational(1, 3), 2, d, true)) != 0);
}

TEST_CASE("contravariant pairing is symmetric") {
  const Rational c(2, 3);
  auto basis = slice_basis(3, 2, true);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(contravariant_pairing(c, 3, basis[i], basis[j]) == contravariant_pairing(c, 3, basis[j], basis[i]));
}

TEST_CASE("irreducible characters have dimension m^{n-1} and symmetric q-degrees") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}, {2, 3}}) {
    INFO(m << "/" << n);
    GradedCharacter ch = irreducible_character(m, n, (m - 1) * (n - 1) + 1);
    int expect = 1;
    for (int i = 1; i < n; ++i) expect *= m;
    CHECK(ch.total == expect);
    std::map<int, int> by_q;
    for (const auto& d : ch.degrees) {
      by_q[d.q_degree] += d.dimension;
      int s = d.other;
      for (int k : d.mult) s += k;
      CHECK(s > 0);
    }
    for (const auto& [q, dim] : by_q) CHECK(by_q[-q] == dim);
  }
}

TEST_CASE("filtration indices follow the degree") {
  for (int m : {3, 5}) {
    auto f = filtration_grading(m, 2);
    REQUIRE(f.size() == static_cast<std::size_t>(m));
    int prev = -1;
    for (const auto& e : f) {
      CHECK(e.degree >= prev);
      prev = e.degree;
      CHECK(e.lower_index < e.upper_index);
      CHECK(e.lower_index == e.degree);
      REQUIRE(e.isotype.has_value());
      CHECK(*e.isotype == e.degree % 2);
    }
  }
  CHECK_THROWS_AS(filtration_grading(4, 2), InputError);
  CHECK_THROWS_AS(filtration_grading(5, 4), ScaleError);
}

TEST_CASE("quasi-invariant traces match the fixed-point series") {
  auto a = check_quasis(2, 3, 16), b = check_quasis(3, 2, 16);
  CHECK(a.matches);
  CHECK(b.matches);
  CHECK(a.rhs == b.rhs);
  CHECK(a.monomial.is_monomial());
}
