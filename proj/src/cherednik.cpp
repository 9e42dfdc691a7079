#include "tkh/cherednik.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tkh/daha.hpp"
#include "tkh/errors.hpp"
#include "tkh/hilbert.hpp"

namespace tkh {

namespace {

const std::vector<std::string>& aq_vars() {
  static const std::vector<std::string> v{"a", "q"};
  return v;
}

// Exponent vectors of total degree d in k variables, lexicographically descending.
std::vector<Exp> compositions(int k, int d) {
  std::vector<Exp> out;
  Exp e(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  if (k == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(0, d);
  return out;
}

Poly u_poly(int n, int k) {
  auto v = x_vars(n);
  return Poly::variable(v, v[static_cast<std::size_t>(k - 1)]) - Poly::variable(v, v[static_cast<std::size_t>(k)]);
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// chi of Lambda^i C^{n-1} at a permutation: coefficient of t^i in
// prod_cycles (1 - (-t)^len) / (1 + t).
std::vector<Integer> hook_characters(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::vector<Integer> poly{1};
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)] - 1) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(len), 0);
    const int sign = len % 2 ? 1 : -1;  // -(-1)^len
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + static_cast<std::size_t>(len)] += sign * poly[k];
    }
    poly = std::move(next);
  }
  // Divide by (1 + t).
  std::vector<Integer> q(poly.size() - 1);
  Integer carry = 0;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
    q[k] = poly[k] - carry;
    carry = q[k];
  }
  return q;
}

// Column vector of f in the x-monomial basis of its degree.
std::vector<Rational> coords_in(const Poly& f, const std::vector<Exp>& monos) {
  std::vector<Rational> v(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) v[i] = f.coeff(monos[i]);
  return v;
}

std::string u_monomial_str(const Exp& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    if (!s.empty()) s += "*";
    s += "u" + std::to_string(k + 1);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

struct DegreeBlock {
  std::vector<Exp> exps;  // u-exponents
  std::vector<Poly> basis;
  Matrix gram;
  std::vector<std::size_t> independent;  // pivot columns of the Gram matrix
};

DegreeBlock degree_block(const Rational& c, int n, int d) {
  DegreeBlock b;
  b.exps = compositions(n - 1, d);
  b.basis = slice_basis(n, d, true);
  b.gram = contravariant_gram(c, n, d, true);
  Matrix g = b.gram;
  b.independent = rref(g);
  return b;
}

}  // namespace

std::vector<std::string> x_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Poly permute(const Poly& f, const std::vector<int>& perm) {
  return f.map_exponents(f.vars(), [&](const Exp& e) {
    Exp out(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) out[static_cast<std::size_t>(perm[k] - 1)] = e[k];
    return out;
  });
}

Poly dunkl_apply(const Rational& c, int n, int i, const Poly& f) {
  if (i < 1 || i > n) throw IndexError("Dunkl index out of range");
  auto v = x_vars(n);
  Poly g = f.is_zero() ? Poly(v) : f;
  Poly out = g.derivative(static_cast<std::size_t>(i - 1));
  if (c == 0) return out;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
    Poly diff = permute(g, perm) - g;
    if (diff.is_zero()) continue;
    Poly den = Poly::variable(v, v[static_cast<std::size_t>(i - 1)]) - Poly::variable(v, v[static_cast<std::size_t>(j - 1)]);
    out += exact_div(diff, den) * c;
  }
  return out;
}

std::vector<Poly> slice_basis(int n, int degree, bool reduced) {
  auto v = x_vars(n);
  std::vector<Poly> out;
  if (!reduced) {
    for (const auto& e : compositions(n, degree)) out.push_back(Poly::monomial(v, e));
    return out;
  }
  std::vector<Poly> u;
  for (int k = 1; k < n; ++k) u.push_back(u_poly(n, k));
  for (const auto& e : compositions(n - 1, degree)) {
    Poly p = Poly::constant(v, 1);
    for (std::size_t k = 0; k < e.size(); ++k) p *= u[k].pow(static_cast<unsigned>(e[k]));
    out.push_back(p);
  }
  return out;
}

Rational contravariant_pairing(const Rational& c, int n, const Poly& f, const Poly& g) {
  // Expand f in x-monomials; each monomial acts as a product of commuting D_i.
  Rational total = 0;
  for (const auto& [e, coef] : f.terms()) {
    Poly h = g;
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i - 1)] && !h.is_zero(); ++k) h = dunkl_apply(c, n, i, h);
    if (h.is_zero()) continue;
    total += coef * h.constant_term();
  }
  return total;
}

Matrix contravariant_gram(const Rational& c, int n, int degree, bool reduced) {
  if (n < 1 || degree < 0) throw InputError("contravariant_gram needs n >= 1 and degree >= 0");
  auto basis = slice_basis(n, degree, reduced);
  // Apply f(D) monomial by monomial in the x expansion, caching D^e g.
  const auto mon = compositions(n, degree);
  std::vector<std::vector<Rational>> dg(basis.size(), std::vector<Rational>(mon.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    // Walk monomials of degree `degree` via prefix products.
    std::map<Exp, Poly> memo;
    std::function<Poly(const Exp&)> apply = [&](const Exp& e) -> Poly {
      auto it = memo.find(e);
      if (it != memo.end()) return it->second;
      std::size_t i = 0;
      while (i < e.size() && e[i] == 0) ++i;
      Poly r;
      if (i == e.size()) {
        r = basis[b];
      } else {
        Exp f = e;
        --f[i];
        Poly inner = apply(f);
        r = inner.is_zero() ? inner : dunkl_apply(c, n, static_cast<int>(i) + 1, inner);
      }
      return memo.emplace(e, r).first->second;
    };
    for (std::size_t k = 0; k < mon.size(); ++k) dg[b][k] = apply(mon[k]).constant_term();
  }
  Matrix G(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Rational s = 0;
      for (std::size_t k = 0; k < mon.size(); ++k) {
        Rational fa = basis[a].coeff(mon[k]);
        if (fa != 0) s += fa * dg[b][k];
      }
      G(a, b) = s;
    }
  return G;
}

GradedCharacter irreducible_character(int m, int n, int d_max) {
  if (m < 1 || n < 2 || std::gcd(m, n) != 1) throw InputError("irreducible_character needs coprime m >= 1, n >= 2");
  if (n > kCherednikMaxN) throw ScaleError("irreducible_character is limited to n <= " + std::to_string(kCherednikMaxN));
  const Rational c(m, n);
  const auto perms = all_perms(n);
  Integer order = factorial(static_cast<unsigned>(n));
  GradedCharacter ch;
  ch.m = m;
  ch.n = n;
  const int mu = (m - 1) * (n - 1);
  for (int d = 0; d <= d_max; ++d) {
    DegreeBlock blk = degree_block(c, n, d);
    const std::size_t r = blk.independent.size();
    if (r == 0) return ch;
    DegreeCharacter dc;
    dc.degree = d;
    dc.q_degree = 2 * d - mu;
    dc.dimension = static_cast<int>(r);
    // Trace of sigma on L(d): tr(G_JJ^{-1} G_J. S_sigma[:, J]).
    auto v = x_vars(n);
    std::vector<Exp> xm = compositions(n, d);
    Matrix B(xm.size(), blk.basis.size());
    for (std::size_t j = 0; j < blk.basis.size(); ++j) {
      auto col = coords_in(blk.basis[j], xm);
      for (std::size_t i = 0; i < xm.size(); ++i) B(i, j) = col[i];
    }
    Matrix GJJ(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) GJJ(a, b) = blk.gram(blk.independent[a], blk.independent[b]);
    std::vector<Rational> acc(static_cast<std::size_t>(n), 0);
    for (const auto& p : perms) {
      Rational tr = 0;
      for (std::size_t a = 0; a < r; ++a) {
        Poly img = permute(blk.basis[blk.independent[a]], p);
        auto s = solve(B, coords_in(img, xm));
        if (!s) throw InternalError("permuted slice element left the slice");
        std::vector<Rational> rhs(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t k = 0; k < s->size(); ++k) rhs[i] += blk.gram(blk.independent[i], k) * (*s)[k];
        auto y = solve(GJJ, rhs);
        if (!y) throw InternalError("Gram block is singular on its pivot columns");
        tr += (*y)[a];
      }
      auto hc = hook_characters(p);
      for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)] += tr * Rational(hc[static_cast<std::size_t>(i)]);
    }
    int hooks = 0;
    for (int i = 0; i < n; ++i) {
      Rational mult = acc[static_cast<std::size_t>(i)] / Rational(order);
      if (mult.get_den() != 1 || mult < 0) throw InternalError("non-integral isotypic multiplicity");
      dc.mult.push_back(static_cast<int>(mult.get_num().get_si()));
      Integer dimi;
      mpz_bin_uiui(dimi.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(i));
      hooks += dc.mult.back() * static_cast<int>(dimi.get_si());
    }
    dc.other = dc.dimension - hooks;
    ch.total += dc.dimension;
    ch.degrees.push_back(dc);
  }
  throw CutoffError("character of L_{" + std::to_string(m) + "/" + std::to_string(n) + "} does not terminate by degree " +
                    std::to_string(d_max));
}

std::vector<FiltrationEntry> filtration_grading(int m, int n) {
  if (n < 2 || n > 3) throw ScaleError("filtration_grading is limited to n = 2, 3");
  if (std::gcd(m, n) != 1) throw InputError("m and n must be coprime");
  const Rational c(m, n);
  const int mu = (m - 1) * (n - 1);
  std::vector<DegreeBlock> blocks;
  for (int d = 0;; ++d) {
    if (d > mu + 1) throw InternalError("L did not terminate at its expected top degree");
    DegreeBlock b = degree_block(c, n, d);
    if (b.independent.empty()) break;
    blocks.push_back(std::move(b));
  }
  const int top = static_cast<int>(blocks.size()) - 1;
  // Twice the h-eigenvalue on degree d.
  auto h2 = [&](int d) { return 2 * d - mu; };
  // in_F[i][d]: does F_i contain all of L(d)? m^i is L(>= i), and the graded
  // pieces make every intersection a union of whole blocks.
  const int imax = top + 1;
  std::vector<std::vector<bool>> in_F(static_cast<std::size_t>(imax) + 1, std::vector<bool>(blocks.size(), false));
  for (int i = 0; i <= imax; ++i)
    for (int j = -mu - imax; j <= mu + 2 * imax + 1; ++j)
      for (int d = 0; d <= top; ++d)
        if (d >= i && h2(d) < 2 * (2 * j - i)) in_F[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = true;
  std::vector<FiltrationEntry> out;
  for (int d = 0; d <= top; ++d) {
    const auto& b = blocks[static_cast<std::size_t>(d)];
    for (auto col : b.independent) {
      FiltrationEntry e;
      e.element = u_monomial_str(b.exps[col]);
      e.degree = d;
      for (int i = 0; i <= imax; ++i)
        if (in_F[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]) e.lower_index = i;
      // The pairing is nondegenerate on each L(d) and pairs only equal degrees,
      // so L(d) ⊂ (F_i)^perp exactly when F_i misses L(d).
      e.upper_index = -1;
      for (int i = 0; i <= imax && e.upper_index < 0; ++i)
        if (!in_F[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]) e.upper_index = i;
      if (n == 2) {
        e.isotype = d % 2;
        Rational stated(d % 2 ? m - 3 : m - 1, 2);
        stated.canonicalize();
        e.stated_index = stated;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

QuasisReport check_quasis(int m, int n, int q_order) {
  if (n < 2 || n > 3) throw ScaleError("check_quasis is limited to n = 2, 3");
  QuasisReport rep;
  rep.m = m;
  rep.n = n;
  rep.q_order = q_order;
  const int mu = (m - 1) * (n - 1);
  GradedCharacter ch = irreducible_character(m, n, mu + 1);
  // Lambda^i C^n = Lambda^i C^{n-1} + Lambda^{i-1} C^{n-1}; the free variable
  // x_1 + ... + x_n contributes 1/(1 - q^2).
  Poly L(aq_vars());
  for (const auto& dc : ch.degrees)
    for (int i = 0; i <= n; ++i) {
      int mult = (i < n ? dc.mult[static_cast<std::size_t>(i)] : 0) + (i > 0 ? dc.mult[static_cast<std::size_t>(i - 1)] : 0);
      if (mult) L.add_term(Exp{2 * i, dc.q_degree}, i % 2 ? -mult : mult);
    }
  Poly lhs(aq_vars());
  for (const auto& [e, coef] : L.terms())
    for (int q = e[1]; q <= q_order; q += 2) lhs.add_term(Exp{e[0], q}, coef);
  rep.lhs = lhs;
  TorusKnot k(m, n);
  // Line up lowest terms: min q-degree, then min a-degree.
  auto lowest = [](const Poly& p) {
    Exp best;
    for (const auto& [e, c] : p.terms())
      if (best.empty() || e[1] < best[1] || (e[1] == best[1] && e[0] < best[0])) best = e;
    return best;
  };
  Poly probe = os_homfly(k, 1 - mu);
  Exp lo_r = lowest(probe), lo_l = lowest(lhs);
  Exp shift{lo_r[0] - lo_l[0], lo_r[1] - lo_l[1]};
  Rational scale = probe.coeff(lo_r) / lhs.coeff(lo_l);
  rep.monomial = Poly::monomial(aq_vars(), shift, scale);
  const int window = q_order + shift[1];
  rep.rhs = os_homfly(k, window);
  Poly residual = rep.rhs - rep.monomial * lhs;
  rep.matches = residual.is_zero();
  if (!rep.matches) throw ConsistencyError("Tr(q^h) side differs from the fixed-point side beyond a monomial", residual.str());
  return rep;
}

}  // namespace tkh
