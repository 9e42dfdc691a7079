#include <catch_amalgamated.hpp>

#include <set>

#include "tkh/daha.hpp"
#include "tkh/errors.hpp"
#include "tkh/hilbert.hpp"

using namespace tkh;

namespace {

const std::vector<std::string> AQ{"a", "q"};

bool in_semigroup(int m, int n, int x) {
  for (int i = 0; i * m <= x; ++i)
    if ((x - i * m) % n == 0) return true;
  return false;
}

using Missing = std::set<int>;

// Oracle: grow down-closed missing sets one element at a time.
std::set<Missing> ideal_oracle(int m, int n, int l) {
  std::set<Missing> level{Missing{}};
  const int bound = m * n + 2 * l + m + n;
  for (int step = 0; step < l; ++step) {
    std::set<Missing> next;
    for (const auto& M : level)
      for (int x = 0; x <= bound; ++x) {
        if (!in_semigroup(m, n, x) || M.count(x)) continue;
        bool ok = true;
        for (int g : {m, n})
          if (x - g >= 0 && in_semigroup(m, n, x - g) && !M.count(x - g)) ok = false;
        if (!ok) continue;
        Missing M2 = M;
        M2.insert(x);
        next.insert(M2);
      }
    level = std::move(next);
  }
  return level;
}

// Oracle: I ⊃ J ⊃ (S \ {0}) + I, compared on a finite window.
long nested_oracle(int m, int n, int l, int jump) {
  const int bound = m * n + 2 * (l + jump) + 2 * (m + n);
  auto inI = [&](const Missing& M, int x) { return in_semigroup(m, n, x) && !M.count(x); };
  long count = 0;
  auto Js = ideal_oracle(m, n, l + jump);
  for (const auto& I : ideal_oracle(m, n, l))
    for (const auto& J : Js) {
      bool ok = true;
      for (int x = 0; x <= bound && ok; ++x) {
        if (inI(J, x) && !inI(I, x)) ok = false;
        bool in_mI = false;
        for (int y = 0; y < x && !in_mI; ++y)
          if (inI(I, y) && in_semigroup(m, n, x - y)) in_mI = true;
        if (in_mI && !inI(J, x)) ok = false;
      }
      if (ok) ++count;
    }
  return count;
}

// Oracle: partitions of N into k parts where a part of size i comes in i colors.
long colored_partitions(int N, int k, int max_part) {
  if (N == 0) return k == 0 ? 1 : 0;
  if (k == 0 || max_part == 0) return 0;
  long total = colored_partitions(N, k, max_part - 1);
  // Use part max_part at least once: multisets of colors.
  for (int c = 1; c * max_part <= N && c <= k; ++c) {
    long multisets = 1;
    for (int i = 0; i < c; ++i) multisets = multisets * (max_part + i) / (i + 1);
    total += multisets * colored_partitions(N - c * max_part, k - c, max_part - 1);
  }
  return total;
}

}  // namespace

TEST_CASE("semigroup gaps") {
  Semigroup S = semigroup(3, 4);
  CHECK(S.gaps == std::vector<int>{1, 2, 5});
  CHECK(S.milnor == 6);
  CHECK(S.frobenius() == 5);
  CHECK(semigroup(1, 5).gaps.empty());
  CHECK(semigroup(1, 5).frobenius() == -1);
  CHECK_THROWS_AS(semigroup(2, 4), InputError);
}

TEST_CASE("ideals of <2,3> by colength") {
  Semigroup S = semigroup(2, 3);
  CHECK(ideals_of_colength(S, 0).size() == 1);
  CHECK(ideals_of_colength(S, 1).size() == 1);
  CHECK(ideals_of_colength(S, 2).size() == 2);
}

TEST_CASE("ideal enumeration agrees with the brute-force oracle") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    Semigroup S = semigroup(m, n);
    for (int l = 0; l <= 5; ++l) {
      INFO(m << "," << n << " l=" << l);
      std::set<Missing> got;
      for (const auto& I : ideals_of_colength(S, l)) got.insert(Missing(I.missing.begin(), I.missing.end()));
      CHECK(got == ideal_oracle(m, n, l));
    }
  }
}

TEST_CASE("nested counts agree with the brute-force oracle") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
    Semigroup S = semigroup(m, n);
    for (int l = 0; l <= 3; ++l)
      for (int j = 0; j <= m; ++j) {
        INFO(m << "," << n << " l=" << l << " jump=" << j);
        CHECK(nested_count(S, l, j) == nested_oracle(m, n, l, j));
      }
  }
}

TEST_CASE("jumps never exceed the multiplicity") {
  Semigroup S = semigroup(3, 5);
  for (const auto& [key, c] : hilb_table(S, 5)) {
    CHECK(key.second <= 3);
    CHECK(c > 0);
  }
}

TEST_CASE("unknot series") {
  Poly u = unknot_series(5);
  Poly want = Poly::monomial(AQ, {-1, 1}) - Poly::monomial(AQ, {1, 1}) + Poly::monomial(AQ, {-1, 3}) -
              Poly::monomial(AQ, {1, 3}) + Poly::monomial(AQ, {-1, 5}) - Poly::monomial(AQ, {1, 5});
  CHECK(u == want);
  CHECK(os_homfly(TorusKnot(1, 1), 11) == unknot_series(11));
}

TEST_CASE("reduced trefoil from fixed points matches the tableau sum") {
  TorusKnot k(2, 3);
  Poly os = os_reduced(k, default_q_order(k));
  Poly shadow = specialize_homological(daha_reduced(k)).specialize(2, -1).embed(AQ);
  CHECK(os == Poly::monomial(AQ, {2, -6}) * shadow);
  CHECK(os.size() == 3);
}

TEST_CASE("reduction needs enough q-order") { CHECK_THROWS_AS(os_reduced(TorusKnot(3, 4), 2), CutoffError); }

TEST_CASE("partition function coefficients") {
  const int order = 16;
  Poly Z = pt_partition_function(order);
  CHECK(Z.coeff(Exp{2, 4}) == 2);
  for (int N = 0; 2 * N <= order; ++N)
    for (int k = 0; k <= N; ++k) {
      INFO("a^" << 2 * k << " q^" << 2 * N);
      CHECK(Z.coeff(Exp{2 * k, 2 * N}) == colored_partitions(N, k, N));
    }
}
