#include "property_suite.hpp"

#include <numeric>
#include <random>

#include "tkh/errors.hpp"
#include "tkh/hilbert.hpp"
#include "tkh/poly.hpp"
#include "tkh/ratexpr.hpp"
#include "tkh/series.hpp"
#include "tkh/tableaux.hpp"

namespace tkh::props {

namespace {

using Rng = std::mt19937;

int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Rational random_rational(Rng& g, int num_bound = 9, int den_bound = 5) {
  int num = 0;
  while (num == 0) num = uniform(g, -num_bound, num_bound);
  Rational r(num, uniform(g, 1, den_bound));
  r.canonicalize();
  return r;
}

const std::vector<std::string>& vars3() {
  static const std::vector<std::string> v{"a", "q", "t"};
  return v;
}

Poly random_poly(Rng& g, int max_terms = 4, int span = 3) {
  Poly p(vars3());
  int terms = uniform(g, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    Exp e{uniform(g, -span, span), uniform(g, -span, span), uniform(g, -span, span)};
    p.add_term(e, random_rational(g));
  }
  if (p.is_zero()) p = Poly::constant(vars3(), 1);
  return p;
}

Partition random_partition(Rng& g, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    int cap = parts.empty() ? left : std::min(left, parts.back());
    int p = uniform(g, 1, cap);
    parts.push_back(p);
    left -= p;
  }
  return Partition(parts);
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

}  // namespace

SuiteResult ring_axioms(int cases, std::uint32_t seed) {
  SuiteResult r{"ring axioms", cases, 0, ""};
  Rng g(seed);
  for (int i = 0; i < cases; ++i) {
    Poly a = random_poly(g), b = random_poly(g), c = random_poly(g);
    if ((a * b) * c != a * (b * c)) fail(r, "associativity: " + a.str() + ", " + b.str() + ", " + c.str());
    if (a * (b + c) != a * b + a * c) fail(r, "distributivity: " + a.str() + ", " + b.str() + ", " + c.str());
    if (a * b != b * a || a + b != b + a) fail(r, "commutativity: " + a.str() + ", " + b.str());
  }
  return r;
}

SuiteResult exact_division(int cases, std::uint32_t seed) {
  SuiteResult r{"exact division", cases, 0, ""};
  Rng g(seed);
  for (int i = 0; i < cases; ++i) {
    Poly p = random_poly(g, 5), q = random_poly(g, 4);
    Poly back;
    if (!try_exact_div(p * q, q, &back) || back != p) fail(r, "exact_div(p*q, q) != p for p=" + p.str() + ", q=" + q.str());
  }
  return r;
}

SuiteResult series_pow_multiplicative(int cases, std::uint32_t seed) {
  SuiteResult r{"series_pow multiplicativity", cases, 0, ""};
  Rng g(seed);
  const std::vector<std::string> cv{"a"};
  for (int i = 0; i < cases; ++i) {
    int order = uniform(g, 2, 7);
    std::vector<Poly> coeffs{Poly::constant(cv, 1)};
    for (int k = 1; k <= order; ++k) {
      Poly c(cv);
      if (uniform(g, 0, 3)) c.add_term(Exp{uniform(g, 0, 2)}, random_rational(g, 4, 3));
      coeffs.push_back(c);
    }
    TruncatedSeries f = TruncatedSeries::from_coeffs(cv, coeffs, order);
    Rational alpha = random_rational(g, 7, 4), beta = random_rational(g, 7, 4);
    TruncatedSeries lhs = series_mul(series_pow(f, alpha, order), series_pow(f, beta, order));
    TruncatedSeries rhs = series_pow(f, alpha + beta, order);
    bool same = lhs.order == rhs.order;
    for (int k = 0; same && k <= order; ++k) same = lhs[k] == rhs[k];
    if (!same) fail(r, "alpha=" + alpha.get_str() + " beta=" + beta.get_str());
  }
  return r;
}

SuiteResult rational_sum_evaluation(int cases, std::uint32_t seed) {
  SuiteResult r{"rational expression sums", cases, 0, ""};
  Rng g(seed);
  const auto& v = vars3();
  for (int i = 0; i < cases; ++i) {
    std::vector<RationalExpression> parts;
    int count = uniform(g, 2, 3);
    for (int k = 0; k < count; ++k) {
      Poly den = Poly::constant(v, 1);
      int factors = uniform(g, 1, 2);
      for (int f = 0; f < factors; ++f) {
        Exp e{uniform(g, 0, 2), uniform(g, -2, 2), uniform(g, -2, 2)};
        if (e == Exp{0, 0, 0}) e[1] = 1;
        den *= Poly::constant(v, 1) - Poly::monomial(v, e);
      }
      parts.emplace_back(random_poly(g, 3, 2), den);
    }
    RationalExpression sum = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) sum += parts[k];
    int checked = 0, attempts = 0;
    while (checked < 20 && attempts < 200) {
      ++attempts;
      std::vector<Rational> pt{random_rational(g, 7, 6), random_rational(g, 7, 6), random_rational(g, 7, 6)};
      Rational expected = 0;
      try {
        for (const auto& p : parts) expected += p.evaluate(pt);
      } catch (const PoleError&) {
        continue;
      }
      ++checked;
      if (sum.evaluate(pt) != expected) {
        fail(r, "sum " + sum.str() + " differs at a point");
        break;
      }
    }
    if (checked < 20) fail(r, "could not find 20 regular points");
  }
  return r;
}

SuiteResult semigroup_gaps(int cases, std::uint32_t seed) {
  SuiteResult r{"semigroup gaps", cases, 0, ""};
  Rng g(seed);
  for (int i = 0; i < cases; ++i) {
    int m = 0, n = 0;
    do {
      m = uniform(g, 1, 7);
      n = uniform(g, 1, 9);
    } while (std::gcd(m, n) != 1);
    Semigroup S = semigroup(m, n);
    if (2 * static_cast<int>(S.gaps.size()) != (m - 1) * (n - 1))
      fail(r, "<" + std::to_string(m) + "," + std::to_string(n) + "> has " + std::to_string(S.gaps.size()) + " gaps");
    if (!S.gaps.empty() && S.frobenius() != m * n - m - n) fail(r, "Frobenius number of <" + std::to_string(m) + "," + std::to_string(n) + ">");
  }
  return r;
}

SuiteResult syt_hook_counts(int cases, std::uint32_t seed) {
  SuiteResult r{"SYT hook counts", cases, 0, ""};
  Rng g(seed);
  for (int i = 0; i < cases; ++i) {
    Partition p = random_partition(g, uniform(g, 0, 8));
    Integer count = 0;
    SytEnumerator it(p);
    while (it.next()) ++count;
    if (count != hook_count(p)) fail(r, p.str() + ": enumerated " + count.get_str() + ", hook formula " + hook_count(p).get_str());
  }
  return r;
}

std::vector<SuiteResult> run_all() {
  return {ring_axioms(300, 11),       exact_division(200, 12), series_pow_multiplicative(150, 13),
          rational_sum_evaluation(50, 14), semigroup_gaps(150, 15), syt_hook_counts(150, 16)};
}

}  // namespace tkh::props
