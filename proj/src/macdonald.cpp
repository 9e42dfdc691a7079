#include "tkh/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

const std::vector<std::string>& half_vars() {
  static const std::vector<std::string> v{"fq", "fs"};
  return v;
}

RationalExpression to_half(const RationalExpression& e) {
  return e.embed(sym_vars()).map_exponents(half_vars(), [](const Exp& x) { return Exp{x[0], 2 * x[1]}; });
}

namespace {

std::mutex mac_mutex;

RationalExpression one_sym() { return RationalExpression(Poly::constant(sym_vars(), 1)); }

RationalExpression power_weight(const Partition& nu) {
  const auto& v = sym_vars();
  RationalExpression w(Poly::constant(v, Rational(z_lambda(nu))));
  for (int part : nu.parts) {
    w *= Poly::constant(v, 1) - Poly::monomial(v, {part, 0});
    w *= RationalExpression::binomial_inverse(v, {0, part});
  }
  return w;
}

// Hall pairing of m_lambda against a function given in power-sum coordinates.
RationalExpression pair_monomial(const Partition& lambda, const SymFunc& g_power,
                                 const std::map<Partition, RationalExpression>& weights) {
  auto ps = partitions_of(lambda.size());
  const Matrix& inv = m_to_p_matrix(lambda.size());
  std::size_t i = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), lambda) - ps.begin());
  RationalExpression total{Poly(sym_vars())};
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const Rational& x = inv(i, j);
    if (x == 0) continue;
    auto it = g_power.coords.find(ps[j]);
    if (it == g_power.coords.end()) continue;
    total += it->second * weights.at(ps[j]) * x;
  }
  return total.reduce();
}

struct MacEntry {
  SymFunc mono;
  SymFunc power;
  RationalExpression norm;
};

}  // namespace

SymFunc macdonald_poly(const Partition& lambda, int limit) {
  const int n = lambda.size();
  if (n > limit) throw ScaleError("|lambda| = " + std::to_string(n) + " exceeds the Macdonald limit");
  static std::map<Partition, MacEntry> cache;
  {
    std::lock_guard<std::mutex> lock(mac_mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second.mono;
  }
  auto ps = partitions_of(n);
  std::map<Partition, RationalExpression> weights;
  for (const auto& nu : ps) weights.emplace(nu, power_weight(nu));
  // Smallest partitions first, so every dominated shape is already done.
  std::reverse(ps.begin(), ps.end());
  for (const auto& lam : ps) {
    {
      std::lock_guard<std::mutex> lock(mac_mutex);
      if (cache.count(lam)) continue;
    }
    SymFunc M = SymFunc::basis_element(SymBasis::monomial, lam);
    for (const auto& mu : ps) {
      if (mu == lam) break;
      if (!lam.dominates(mu)) continue;
      MacEntry prev;
      {
        std::lock_guard<std::mutex> lock(mac_mutex);
        prev = cache.at(mu);
      }
      RationalExpression c = pair_monomial(lam, prev.power, weights) / prev.norm;
      c.reduce();
      if (c.is_zero()) continue;
      for (const auto& [nu, d] : prev.mono.coords) {
        RationalExpression term = -(c * d);
        M.add(nu, term.reduce());
      }
    }
    for (auto& [nu, d] : M.coords) d.reduce();
    MacEntry e;
    e.mono = M;
    e.power = to_powersum(M);
    for (auto& [nu, d] : e.power.coords) d.reduce();
    RationalExpression norm{Poly(sym_vars())};
    for (const auto& [nu, d] : e.power.coords) norm += d * d * weights.at(nu);
    e.norm = norm.reduce();
    std::lock_guard<std::mutex> lock(mac_mutex);
    cache.emplace(lam, std::move(e));
  }
  std::lock_guard<std::mutex> lock(mac_mutex);
  return cache.at(lambda).mono;
}

RationalExpression macdonald_norm(const Partition& lambda) {
  const auto& v = sym_vars();
  RationalExpression r = one_sym();
  for (const auto& b : box_stats(lambda)) {
    r *= Poly::constant(v, 1) - Poly::monomial(v, {b.arm + 1, b.leg});
    Exp e{b.arm, b.leg + 1};
    r *= RationalExpression::binomial_inverse(v, e);
  }
  return r;
}

Poly monomial_symmetric_at(const Partition& lambda, const std::vector<Exp>& alphabet,
                           const std::vector<std::string>& vars) {
  const int N = static_cast<int>(alphabet.size());
  Poly out(vars);
  if (lambda.length() > N) return out;
  std::vector<int> e(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  do {
    Exp x(vars.size(), 0);
    for (int i = 0; i < N; ++i)
      for (std::size_t k = 0; k < vars.size(); ++k) x[k] += e[i] * alphabet[i][k];
    out.add_term(x, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

RationalExpression principal_eval(const Partition& lambda, int N, const Partition& mu) {
  if (mu.length() > N) throw InputError("principal_eval: mu has more than N rows");
  const auto& hv = half_vars();
  std::vector<Exp> alphabet;
  for (int i = 1; i <= N; ++i) alphabet.push_back(Exp{mu[i - 1], N + 1 - 2 * i});
  RationalExpression total{Poly(hv)};
  if (lambda.length() > N) return total;
  SymFunc M = macdonald_poly(lambda);
  for (const auto& [nu, c] : M.coords) {
    Poly mv = monomial_symmetric_at(nu, alphabet, hv);
    if (mv.is_zero()) continue;
    total += to_half(c) * mv;
  }
  return total.reduce();
}

RefinedST refined_ST(int N, int cutoff) {
  RefinedST st;
  st.index = partitions_in_box(N, cutoff);
  const std::size_t k = st.index.size();
  const auto& hv = half_vars();
  std::vector<RationalExpression> base;
  for (const auto& lam : st.index) base.push_back(principal_eval(lam, N, Partition()));
  st.S.assign(k, std::vector<RationalExpression>(k));
  st.T.assign(k, std::vector<RationalExpression>(k, RationalExpression(Poly(hv))));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      RationalExpression s = principal_eval(st.index[i], N, st.index[j]) * base[j];
      st.S[i][j] = s.reduce();
    }
    const Partition& lam = st.index[i];
    int qe = 0, te = 0;
    for (int r = 0; r < lam.length(); ++r) {
      qe += lam[r] * (lam[r] - 1) / 2;
      te += lam[r] * r;
    }
    st.T[i][i] = RationalExpression(Poly::monomial(hv, {qe, 2 * te}));
  }
  return st;
}

std::vector<std::string> laurent_vars(int N) {
  std::vector<std::string> v;
  for (int i = 1; i <= N; ++i) v.push_back("x" + std::to_string(i));
  v.push_back("fq");
  v.push_back("fs");
  return v;
}

LaurentFunc laurent_from(int N, const Poly& p) { return LaurentFunc{N, p.embed(laurent_vars(N))}; }

namespace {

// Demazure-Lusztig operator t^{1/2} s_i + (t^{1/2} - t^{-1/2}) (s_i - 1)/(x_i/x_{i+1} - 1).
Poly apply_T(const Poly& f, int i, int N, bool inverse) {
  if (i < 1 || i >= N) throw IndexError("T_i index out of range");
  const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  const std::size_t s = static_cast<std::size_t>(N) + 1;
  Poly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exp sw = e;
    std::swap(sw[a], sw[b]);
    Exp se = sw;
    se[s] += 1;
    out.add_term(se, c);
    const int p = e[a], r = e[b];
    if (p == r) continue;
    // (s_i - 1) x^e / (x_i/x_{i+1} - 1) as an explicit geometric sum.
    int lo = std::min(p, r), len = std::abs(p - r);
    Rational sign = p > r ? Rational(-1) : Rational(1);
    for (int j = 0; j < len; ++j) {
      Exp g = e;
      g[a] = lo + j;
      g[b] = lo + 1 + (len - 1 - j);
      Exp g1 = g, g2 = g;
      g1[s] += 1;
      g2[s] -= 1;
      out.add_term(g1, c * sign);
      out.add_term(g2, -c * sign);
    }
  }
  if (inverse) {
    // T^{-1} = T - (s - s^{-1})
    Exp up(f.nvars(), 0), down(f.nvars(), 0);
    up[s] = 1;
    down[s] = -1;
    out -= f.shifted(up) - f.shifted(down);
  }
  return out;
}

Poly apply_swap(const Poly& f, int i) {
  Poly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exp sw = e;
    std::swap(sw[static_cast<std::size_t>(i - 1)], sw[static_cast<std::size_t>(i)]);
    out.add_term(sw, c);
  }
  return out;
}

// sigma_pi = s_{N-1} ... s_1 d_1, where d_1 scales x_1 by q.
Poly apply_pi(const Poly& f, int N) {
  const std::size_t qi = static_cast<std::size_t>(N);
  Poly g(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exp x = e;
    x[qi] += e[0];
    g.add_term(x, c);
  }
  for (int i = 1; i < N; ++i) g = apply_swap(g, i);
  return g;
}

// Y_i = T_i ... T_{N-1} sigma_pi T_1^{-1} ... T_{i-1}^{-1}; the rightmost factor acts first.
Poly apply_Y(const Poly& f, int i, int N) {
  if (i < 1 || i > N) throw IndexError("Y_i index out of range");
  Poly g = f;
  for (int k = i - 1; k >= 1; --k) g = apply_T(g, k, N, true);
  g = apply_pi(g, N);
  for (int k = N - 1; k >= i; --k) g = apply_T(g, k, N, false);
  return g;
}

}  // namespace

LaurentFunc dl_apply(const std::vector<DLLetter>& word, const LaurentFunc& f) {
  Poly g = f.f;
  const int N = f.N;
  for (const auto& l : word) {
    switch (l.kind) {
      case DLKind::T:
        g = apply_T(g, l.index, N, false);
        break;
      case DLKind::Tinv:
        g = apply_T(g, l.index, N, true);
        break;
      case DLKind::X: {
        if (l.index < 1 || l.index > N) throw IndexError("X_j index out of range");
        Exp e(g.nvars(), 0);
        e[static_cast<std::size_t>(l.index - 1)] = 1;
        g = g.shifted(e);
        break;
      }
      case DLKind::Y:
        g = apply_Y(g, l.index, N);
        break;
    }
  }
  return LaurentFunc{N, g};
}

std::vector<DLLetter> parse_dl_word(const std::string& s) {
  std::vector<DLLetter> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    DLLetter l{DLKind::T, 0};
    std::size_t pos = 1;
    if (tok[0] == 'T') {
      if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
        l.kind = DLKind::Tinv;
        tok = tok.substr(0, tok.size() - 3);
      }
    } else if (tok[0] == 'X') {
      l.kind = DLKind::X;
    } else if (tok[0] == 'Y') {
      l.kind = DLKind::Y;
    } else {
      throw InputError("bad operator letter '" + tok + "'");
    }
    try {
      l.index = std::stoi(tok.substr(pos));
    } catch (const std::exception&) {
      throw InputError("bad operator letter '" + tok + "'");
    }
    out.push_back(l);
  }
  return out;
}

LaurentFunc symmetric_to_laurent(const SymFunc& f, int N, RationalExpression* scale) {
  if (f.basis != SymBasis::monomial) throw InternalError("symmetric_to_laurent expects monomial coordinates");
  const auto& hv = half_vars();
  // Common denominator: max power of every binomial factor.
  RationalExpression::Factors lcm;
  std::vector<std::pair<Partition, RationalExpression>> coords;
  for (const auto& [nu, c] : f.coords) {
    RationalExpression h = to_half(c);
    h.reduce();
    if (!h.rest().is_zero() && !h.rest().is_constant()) throw InternalError("coefficient has a non-binomial denominator");
    for (const auto& [e, k] : h.factors()) lcm[e] = std::max(lcm[e], k);
    coords.emplace_back(nu, h);
  }
  Poly D = Poly::constant(hv, 1);
  for (const auto& [e, k] : lcm) {
    Poly b = Poly::constant(hv, 1);
    b.add_term(e, -1);
    D *= b.pow(static_cast<unsigned>(k));
  }
  auto lv = laurent_vars(N);
  std::vector<Exp> alphabet;
  for (int i = 0; i < N; ++i) {
    Exp x(lv.size(), 0);
    x[static_cast<std::size_t>(i)] = 1;
    alphabet.push_back(x);
  }
  Poly out(lv);
  for (const auto& [nu, h] : coords) {
    Poly c = (h * D).to_poly();
    Poly mv = monomial_symmetric_at(nu, alphabet, lv);
    if (mv.is_zero()) continue;
    out += c.embed(lv) * mv;
  }
  if (scale) *scale = RationalExpression(D);
  return LaurentFunc{N, out};
}

Poly evaluation_sub(const LaurentFunc& f) {
  const int N = f.N;
  const auto& hv = half_vars();
  Poly out(hv);
  for (const auto& [e, c] : f.f.terms()) {
    int s = e[static_cast<std::size_t>(N) + 1];
    // t^{-rho_i} = s^{-(N+1-2i)}
    for (int i = 1; i <= N; ++i) s -= e[static_cast<std::size_t>(i - 1)] * (N + 1 - 2 * i);
    out.add_term(Exp{e[static_cast<std::size_t>(N)], s}, c);
  }
  return out;
}

}  // namespace tkh
