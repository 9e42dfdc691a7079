#include "tkh/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tkh/errors.hpp"

namespace tkh {

namespace {

const std::vector<std::string>& aq_vars() {
  static const std::vector<std::string> v{"a", "q"};
  return v;
}

// Drop terms with q-degree above the order.
Poly truncate_q(const Poly& p, int order) {
  Poly out(p.vars());
  for (const auto& [e, c] : p.terms())
    if (e[1] <= order) out.add_term(e, c);
  return out;
}

}  // namespace

bool Semigroup::contains(int x) const {
  if (x < 0) return false;
  return !std::binary_search(gaps.begin(), gaps.end(), x);
}

Semigroup semigroup(int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw InputError("semigroup generators must be coprime positive integers");
  Semigroup S;
  S.m = m;
  S.n = n;
  S.milnor = (m - 1) * (n - 1);
  // Every integer >= milnor is representable.
  for (int x = 0; x < S.milnor; ++x) {
    bool rep = false;
    for (int i = 0; i * m <= x && !rep; ++i) rep = (x - i * m) % n == 0;
    if (!rep) S.gaps.push_back(x);
  }
  if (2 * static_cast<int>(S.gaps.size()) != S.milnor) throw InternalError("gap count differs from half the Milnor number");
  return S;
}

bool SemigroupIdeal::contains(const Semigroup& S, int x) const {
  return S.contains(x) && !std::binary_search(missing.begin(), missing.end(), x);
}

std::vector<int> SemigroupIdeal::minimal_generators(const Semigroup& S) const {
  // Above c + min(m, n) every element is hit by subtracting the smaller generator.
  int c = S.frobenius();
  if (!missing.empty()) c = std::max(c, missing.back());
  const int top = c + std::min(S.m, S.n);
  std::vector<int> out;
  for (int x = 0; x <= top; ++x) {
    if (!contains(S, x)) continue;
    bool generated = false;
    for (int s = 1; s <= x && !generated; ++s)
      generated = S.contains(s) && contains(S, x - s);
    if (!generated) out.push_back(x);
  }
  return out;
}

std::vector<SemigroupIdeal> ideals_of_colength(const Semigroup& S, int l) {
  if (l < 0) throw InputError("colength must be nonnegative");
  // Every colength l+1 ideal is a colength l ideal minus one minimal generator:
  // put back the largest missing element.
  std::set<SemigroupIdeal> layer{SemigroupIdeal{}};
  for (int k = 0; k < l; ++k) {
    std::set<SemigroupIdeal> next;
    for (const auto& I : layer)
      for (int g : I.minimal_generators(S)) {
        SemigroupIdeal J = I;
        J.missing.insert(std::upper_bound(J.missing.begin(), J.missing.end(), g), g);
        next.insert(std::move(J));
      }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

Integer nested_count(const Semigroup& S, int l, int jump) {
  if (jump < 0) throw InputError("jump must be nonnegative");
  Integer total = 0;
  // J is I minus any set of minimal generators of I.
  for (const auto& I : ideals_of_colength(S, l)) {
    auto g = static_cast<unsigned long>(I.minimal_generators(S).size());
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), g, static_cast<unsigned long>(jump));
    total += c;
  }
  return total;
}

HilbTable hilb_table(const Semigroup& S, int max_l) {
  HilbTable t;
  for (int l = 0; l <= max_l; ++l) {
    std::map<int, Integer> counts;
    for (const auto& I : ideals_of_colength(S, l)) {
      auto g = I.minimal_generators(S).size();
      for (std::size_t j = 0; j <= g; ++j) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), g, j);
        counts[static_cast<int>(j)] += c;
      }
    }
    for (auto& [j, c] : counts) t[{l, j}] = c;
  }
  return t;
}

Poly os_homfly(const TorusKnot& k, int q_order) {
  Semigroup S = semigroup(k.m, k.n);
  // The prefactor (a/q)^{mu-1} shifts q-degrees by 1 - mu.
  const int shift = 1 - S.milnor;
  const int max_l = (q_order - shift) >= 0 ? (q_order - shift) / 2 : -1;
  Poly out(aq_vars());
  for (const auto& [key, c] : hilb_table(S, max_l)) {
    auto [l, j] = key;
    Rational coef(c);
    if (j % 2) coef = -coef;
    out.add_term(Exp{2 * j + S.milnor - 1, 2 * l + shift}, coef);
  }
  return truncate_q(out, q_order);
}

Poly unknot_series(int q_order) {
  Poly out(aq_vars());
  for (int l = 0; 2 * l + 1 <= q_order; ++l) {
    out.add_term(Exp{-1, 2 * l + 1}, 1);
    out.add_term(Exp{1, 2 * l + 1}, -1);
  }
  return out;
}

Poly os_reduced(const TorusKnot& k, int q_order) {
  // The reduced polynomial tops out at q^mu, and the product below is exact up
  // to q^{q_order - 1}.
  Semigroup S = semigroup(k.m, k.n);
  if (q_order < S.milnor + 1) throw CutoffError("q_order too small to close up the reduced polynomial");
  Poly raw = os_homfly(k, q_order);
  // Divide by (q/a)(1 - a^2)/(1 - q^2): multiply by (a/q)(1 - q^2), then
  // divide by (1 - a^2) exactly.
  Poly mult(aq_vars());
  mult.add_term(Exp{1, -1}, 1);
  mult.add_term(Exp{1, 1}, -1);
  Poly num = truncate_q(raw * mult, q_order - 1);
  Poly den(aq_vars());
  den.add_term(Exp{0, 0}, 1);
  den.add_term(Exp{2, 0}, -1);
  return exact_div(num, den);
}

int default_q_order(const TorusKnot& k) { return 2 * (k.m - 1) * (k.n - 1) + 10; }

Poly pt_partition_function(int q_order) {
  // prod (1 - a^2 q^{2i})^{-i} = prod_i (sum_k binom(i+k-1, k) a^{2k} q^{2ik})
  Poly out = Poly::constant(aq_vars(), 1);
  for (int i = 1; 2 * i <= q_order; ++i) {
    Poly f(aq_vars());
    for (int k = 0; 2 * i * k <= q_order; ++k) f.add_term(Exp{2 * k, 2 * i * k}, binomial(Rational(i + k - 1), static_cast<unsigned>(k)));
    out = truncate_q(out * f, q_order);
  }
  return out;
}

Poly pt_left_side(const TorusKnot& k, int q_order) {
  Semigroup S = semigroup(k.m, k.n);
  Poly sum(aq_vars());
  for (const auto& [key, c] : hilb_table(S, q_order / 2)) {
    auto [l, r] = key;
    sum.add_term(Exp{2 * r, 2 * l}, r % 2 ? Rational(-c) : Rational(c));
  }
  return truncate_q(truncate_q(sum, q_order) * pt_partition_function(q_order), q_order);
}

}  // namespace tkh
