#include "tkh/daha.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

namespace {

// Dense Laurent polynomial in (q, t) with integer coefficients. All DAHA
// numerators and denominators are integral, and dense storage keeps the
// binomial multiplications cheap.
class Dense2 {
 public:
  Dense2() = default;
  static Dense2 monomial(int q, int t, const Integer& c) {
    Dense2 d;
    d.q0_ = q;
    d.t0_ = t;
    d.nq_ = d.nt_ = 1;
    d.c_.assign(1, c);
    return d;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  Integer at(int q, int t) const {
    int i = q - q0_, j = t - t0_;
    if (i < 0 || j < 0 || i >= nq_ || j >= nt_) return 0;
    return c_[static_cast<std::size_t>(i * nt_ + j)];
  }

  // this *= (1 - q^a t^b)
  void mul_binomial(int a, int b) {
    if (c_.empty()) return;
    int nq0 = std::min(q0_, q0_ + a), nt0 = std::min(t0_, t0_ + b);
    int nq1 = std::max(q0_ + nq_, q0_ + nq_ + a), nt1 = std::max(t0_ + nt_, t0_ + nt_ + b);
    Dense2 r;
    r.q0_ = nq0;
    r.t0_ = nt0;
    r.nq_ = nq1 - nq0;
    r.nt_ = nt1 - nt0;
    r.c_.assign(static_cast<std::size_t>(r.nq_ * r.nt_), 0);
    for (int i = 0; i < nq_; ++i)
      for (int j = 0; j < nt_; ++j) {
        const Integer& v = c_[static_cast<std::size_t>(i * nt_ + j)];
        if (v == 0) continue;
        int qi = q0_ + i - nq0, tj = t0_ + j - nt0;
        r.c_[static_cast<std::size_t>(qi * r.nt_ + tj)] += v;
        r.c_[static_cast<std::size_t>((qi + a) * r.nt_ + tj + b)] -= v;
      }
    *this = std::move(r);
  }

  // Exact division by (1 - q^a t^b) with (a, b) canonical; false if not divisible.
  bool div_binomial(int a, int b, Dense2* out) const {
    if (c_.empty()) {
      *out = *this;
      return true;
    }
    // p = (1 - x^e) r  =>  r_k = p_k + r_{k-e}, walking k upward along e.
    int rq0 = q0_, rt0 = std::min(t0_, t0_ - b);
    int rq1 = q0_ + nq_ - a, rt1 = std::max(t0_ + nt_, t0_ + nt_ - b);
    if (rq1 <= rq0 || rt1 <= rt0) return false;
    Dense2 r;
    r.q0_ = rq0;
    r.t0_ = rt0;
    r.nq_ = rq1 - rq0;
    r.nt_ = rt1 - rt0;
    r.c_.assign(static_cast<std::size_t>(r.nq_ * r.nt_), 0);
    auto idx = [&](int q, int t) { return static_cast<std::size_t>((q - rq0) * r.nt_ + (t - rt0)); };
    if (a > 0) {
      for (int q = rq0; q < rq1; ++q)
        for (int t = rt0; t < rt1; ++t) {
          Integer v = at(q, t);
          int pq = q - a, pt = t - b;
          if (pq >= rq0 && pt >= rt0 && pt < rt1) v += r.c_[idx(pq, pt)];
          r.c_[idx(q, t)] = v;
        }
    } else {
      for (int q = rq0; q < rq1; ++q)
        for (int t = rt0; t < rt1; ++t) {
          Integer v = at(q, t);
          int pt = t - b;
          if (pt >= rt0) v += r.c_[idx(q, pt)];
          r.c_[idx(q, t)] = v;
        }
    }
    r.trim();
    Dense2 check = r;
    check.mul_binomial(a, b);
    check -= *this;
    if (!check.is_zero()) return false;
    *out = std::move(r);
    return true;
  }

  Dense2& operator+=(const Dense2& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
      *this = o;
      return *this;
    }
    int nq0 = std::min(q0_, o.q0_), nt0 = std::min(t0_, o.t0_);
    int nq1 = std::max(q0_ + nq_, o.q0_ + o.nq_), nt1 = std::max(t0_ + nt_, o.t0_ + o.nt_);
    if (nq0 != q0_ || nt0 != t0_ || nq1 != q0_ + nq_ || nt1 != t0_ + nt_) regrid(nq0, nt0, nq1 - nq0, nt1 - nt0);
    for (int i = 0; i < o.nq_; ++i)
      for (int j = 0; j < o.nt_; ++j) {
        const Integer& v = o.c_[static_cast<std::size_t>(i * o.nt_ + j)];
        if (v != 0) c_[static_cast<std::size_t>((o.q0_ + i - q0_) * nt_ + (o.t0_ + j - t0_))] += v;
      }
    return *this;
  }
  Dense2& operator-=(const Dense2& o) {
    Dense2 n = o;
    for (auto& x : n.c_) x = -x;
    return *this += n;
  }

  friend Dense2 operator*(const Dense2& x, const Dense2& y) {
    if (x.c_.empty() || y.c_.empty()) return Dense2();
    Dense2 r;
    r.q0_ = x.q0_ + y.q0_;
    r.t0_ = x.t0_ + y.t0_;
    r.nq_ = x.nq_ + y.nq_ - 1;
    r.nt_ = x.nt_ + y.nt_ - 1;
    r.c_.assign(static_cast<std::size_t>(r.nq_ * r.nt_), 0);
    for (int i = 0; i < x.nq_; ++i)
      for (int j = 0; j < x.nt_; ++j) {
        const Integer& v = x.c_[static_cast<std::size_t>(i * x.nt_ + j)];
        if (v == 0) continue;
        for (int k = 0; k < y.nq_; ++k)
          for (int l = 0; l < y.nt_; ++l) {
            const Integer& w = y.c_[static_cast<std::size_t>(k * y.nt_ + l)];
            if (w != 0) r.c_[static_cast<std::size_t>((i + k) * r.nt_ + j + l)] += v * w;
          }
      }
    return r;
  }

  void shift(int dq, int dt) {
    q0_ += dq;
    t0_ += dt;
  }
  void negate() {
    for (auto& x : c_) x = -x;
  }

  void trim() {
    int qa = nq_, qb = -1, ta = nt_, tb = -1;
    for (int i = 0; i < nq_; ++i)
      for (int j = 0; j < nt_; ++j)
        if (c_[static_cast<std::size_t>(i * nt_ + j)] != 0) {
          qa = std::min(qa, i);
          qb = std::max(qb, i);
          ta = std::min(ta, j);
          tb = std::max(tb, j);
        }
    if (qb < 0) {
      *this = Dense2();
      return;
    }
    if (qa == 0 && ta == 0 && qb == nq_ - 1 && tb == nt_ - 1) return;
    regrid(q0_ + qa, t0_ + ta, qb - qa + 1, tb - ta + 1);
  }

  // Adds the coefficients into p as the (q, t) part with a-exponent `ae`.
  void add_to(Poly* p, int ae) const {
    for (int i = 0; i < nq_; ++i)
      for (int j = 0; j < nt_; ++j) {
        const Integer& v = c_[static_cast<std::size_t>(i * nt_ + j)];
        if (v != 0) p->add_term(Exp{ae, q0_ + i, t0_ + j}, Rational(v));
      }
  }

 private:
  void regrid(int q0, int t0, int nq, int nt) {
    std::vector<Integer> c(static_cast<std::size_t>(nq * nt), 0);
    for (int i = 0; i < nq_; ++i)
      for (int j = 0; j < nt_; ++j) {
        int qi = q0_ + i - q0, tj = t0_ + j - t0;
        if (qi < 0 || tj < 0 || qi >= nq || tj >= nt) continue;
        c[static_cast<std::size_t>(qi * nt + tj)] = std::move(c_[static_cast<std::size_t>(i * nt_ + j)]);
      }
    q0_ = q0;
    t0_ = t0;
    nq_ = nq;
    nt_ = nt;
    c_ = std::move(c);
  }

  int q0_ = 0, t0_ = 0, nq_ = 0, nt_ = 0;
  std::vector<Integer> c_;
};

using QT = std::pair<int, int>;

// sign * q^mq t^mt * prod (1 - q^a t^b)^k, keyed by canonical (a, b).
struct FactoredTerm {
  int sign = 1;
  int mq = 0, mt = 0;
  std::map<QT, int> binom;
  bool zero = false;

  void mono(int dq, int dt) {
    mq += dq;
    mt += dt;
  }
  // Multiply by (1 - q^a t^b)^k, k may be negative.
  void mul(int a, int b, int k) {
    if (a == 0 && b == 0) {
      if (k > 0) zero = true;
      else throw InternalError("DAHA summand has a vanishing denominator factor");
      return;
    }
    if (a < 0 || (a == 0 && b < 0)) {
      // 1 - x^e = -x^e (1 - x^{-e})
      if (k % 2) sign = -sign;
      mq += k * a;
      mt += k * b;
      a = -a;
      b = -b;
    }
    int& slot = binom[{a, b}];
    slot += k;
    if (slot == 0) binom.erase({a, b});
  }
  // Multiply by (X - Y) for monomials X, Y.
  void mul_diff(QT x, QT y, int k) {
    mono(k * x.first, k * x.second);
    mul(y.first - x.first, y.second - x.second, k);
  }
  void absorb(const FactoredTerm& o) {
    sign *= o.sign;
    mono(o.mq, o.mt);
    for (const auto& [e, k] : o.binom) mul(e.first, e.second, k);
    zero = zero || o.zero;
  }
};

// num / prod (1 - x^e)^k
struct FactoredRatio {
  Dense2 num;
  std::map<QT, int> den;

  void reduce() {
    for (auto it = den.begin(); it != den.end();) {
      while (it->second > 0) {
        Dense2 q;
        if (!num.div_binomial(it->first.first, it->first.second, &q)) break;
        num = std::move(q);
        --it->second;
      }
      if (it->second == 0) it = den.erase(it);
      else ++it;
    }
  }
};

// Sum of factored terms over the lcm of their denominators.
FactoredRatio sum_terms(const std::vector<FactoredTerm>& terms) {
  FactoredRatio out;
  for (const auto& t : terms)
    for (const auto& [e, k] : t.binom)
      if (k < 0) out.den[e] = std::max(out.den[e], -k);
  for (const auto& t : terms) {
    if (t.zero) continue;
    Dense2 p = Dense2::monomial(t.mq, t.mt, t.sign);
    std::map<QT, int> pw = out.den;
    for (const auto& [e, k] : t.binom) pw[e] += k;
    for (const auto& [e, k] : pw)
      for (int i = 0; i < k; ++i) p.mul_binomial(e.first, e.second);
    out.num += p;
  }
  out.num.trim();
  return out;
}

void add_ratio(FactoredRatio* acc, const FactoredRatio& o) {
  std::map<QT, int> lcm = acc->den;
  for (const auto& [e, k] : o.den) lcm[e] = std::max(lcm[e], k);
  Dense2 a = acc->num, b = o.num;
  for (const auto& [e, k] : lcm) {
    auto ia = acc->den.find(e);
    auto ib = o.den.find(e);
    int ka = ia == acc->den.end() ? 0 : ia->second;
    int kb = ib == o.den.end() ? 0 : ib->second;
    for (int i = ka; i < k; ++i) a.mul_binomial(e.first, e.second);
    for (int i = kb; i < k; ++i) b.mul_binomial(e.first, e.second);
  }
  a += b;
  a.trim();
  acc->num = std::move(a);
  acc->den = std::move(lcm);
}

// Box weight x = q^{-col} t^{row} as an exponent pair.
QT weight(const std::pair<int, int>& pos) { return {-pos.second, pos.first}; }

QT add(QT x, QT y) { return {x.first + y.first, x.second + y.second}; }

// gamma~ and 1/g~_mu as factored terms.
FactoredTerm gamma_term() {
  FactoredTerm g;
  g.mul_diff({0, 1}, {0, 0}, 1);   // t - 1
  g.mul_diff({1, 0}, {0, 0}, 1);   // q - 1
  g.mul_diff({1, 0}, {0, 1}, -1);  // 1/(q - t)
  return g;
}

FactoredTerm inv_g_mu(const Partition& mu) {
  FactoredTerm g;
  for (const auto& b : box_stats(mu)) {
    g.mul(b.arm, b.leg + 1, -1);
    g.mul(-b.arm - 1, -b.leg, -1);
  }
  return g;
}

// The tableau-dependent part of the summand (everything except the a-factor
// and the shape-only factors).
FactoredTerm tableau_term(const StandardTableau& tab, int m, int n) {
  FactoredTerm t;
  std::vector<QT> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = weight(tab.position[i]);
  for (int i = 0; i < n; ++i) {
    int s = s_fraction(m, n, i + 1);
    t.mono(s * x[i].first, s * x[i].second);
  }
  for (int k = 0; k + 1 < n; ++k) {
    // 1 - q x_{k+1} / (t x_k)
    QT e = add(add(x[k + 1], {1, -1}), {-x[k].first, -x[k].second});
    t.mul(e.first, e.second, -1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QT xi = x[i], xj = x[j];
      t.mul_diff(xj, add(xi, {1, 0}), 1);   // x_j - q x_i
      t.mul_diff(add(xj, {0, 1}), xi, 1);   // t x_j - x_i
      t.mul_diff(xj, xi, -1);               // x_j - x_i
      t.mul_diff(add(xj, {0, 1}), add(xi, {1, 0}), -1);  // t x_j - q x_i
    }
  return t;
}

// Shape-only factor: gamma~^n / g~_mu * prod_i (q - t x_i).
FactoredTerm shape_term(const Partition& mu, int n) {
  FactoredTerm s;
  FactoredTerm g = gamma_term();
  for (int i = 0; i < n; ++i) s.absorb(g);
  s.absorb(inv_g_mu(mu));
  for (const auto& b : box_stats(mu)) {
    QT x = weight({b.row, b.col});
    s.mul_diff({1, 0}, add(x, {0, 1}), 1);
  }
  return s;
}

// Coefficients of prod_i (1 - a / x_i) in a: (-1)^j e_j(1/x) as dense polys.
std::vector<Dense2> a_factor(const Partition& mu) {
  std::vector<Dense2> coeff{Dense2::monomial(0, 0, 1)};
  for (const auto& b : box_stats(mu)) {
    QT x = weight({b.row, b.col});
    std::vector<Dense2> next(coeff.size() + 1);
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      next[j] += coeff[j];
      Dense2 s = coeff[j];
      s.shift(-x.first, -x.second);
      s.negate();
      next[j + 1] += s;
    }
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace

TorusKnot::TorusKnot(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw InputError("torus knot parameters must be positive");
  if (std::gcd(m, n) != 1) throw InputError("torus knot parameters must be coprime");
}

std::string TorusKnot::str() const {
  std::ostringstream os;
  os << "T(" << m << "," << n << ")";
  return os.str();
}

const std::vector<std::string>& daha_vars() {
  static const std::vector<std::string> v{"fa", "fq", "ft"};
  return v;
}

const std::vector<std::string>& homological_vars() {
  static const std::vector<std::string> v{"a", "q", "tc"};
  return v;
}

int s_fraction(int m, int n, int i) {
  if (i < 1 || i > n) throw IndexError("s_fraction: index out of range");
  return (i * m) / n - ((i - 1) * m) / n;
}

ShapeConstants shape_constants(const Partition& mu) {
  const auto& v = daha_vars();
  Poly q = Poly::variable(v, "fq"), t = Poly::variable(v, "ft"), one = Poly::constant(v, 1);
  ShapeConstants c;
  c.gamma_tilde = RationalExpression((t - one) * (q - one), q - t);
  Poly g = one;
  for (const auto& b : box_stats(mu)) {
    g *= one - Poly::monomial(v, {0, b.arm, b.leg + 1});
    g *= one - Poly::monomial(v, {0, -b.arm - 1, -b.leg});
  }
  c.g_mu = g;
  return c;
}

SuperPolynomial daha_superpoly(const TorusKnot& k, int symbolic_limit) {
  const int m = k.m, n = k.n;
  if (n > symbolic_limit) {
    throw ScaleError("n = " + std::to_string(n) + " exceeds the symbolic limit " + std::to_string(symbolic_limit) +
                     "; use point evaluation");
  }
  std::vector<FactoredRatio> by_a(static_cast<std::size_t>(n) + 1);
  for (const Partition& mu : partitions_of(n)) {
    std::vector<FactoredTerm> terms;
    SytEnumerator it(mu);
    while (it.next()) terms.push_back(tableau_term(it.current(), m, n));
    FactoredRatio inner = sum_terms(terms);
    FactoredTerm s = shape_term(mu, n);
    Dense2 snum = Dense2::monomial(s.mq, s.mt, s.sign);
    for (const auto& [e, p] : s.binom) {
      if (p > 0)
        for (int i = 0; i < p; ++i) snum.mul_binomial(e.first, e.second);
      else
        inner.den[e] += -p;
    }
    inner.num = inner.num * snum;
    inner.reduce();
    std::vector<Dense2> af = a_factor(mu);
    for (std::size_t j = 0; j < af.size(); ++j) {
      FactoredRatio c{inner.num * af[j], inner.den};
      add_ratio(&by_a[j], c);
    }
  }
  Poly value(daha_vars());
  for (std::size_t j = 0; j < by_a.size(); ++j) {
    FactoredRatio& r = by_a[j];
    r.reduce();
    if (!r.den.empty()) {
      std::ostringstream os;
      for (const auto& [e, p] : r.den) os << "(1-q^" << e.first << "t^" << e.second << ")^" << p << " ";
      throw InternalError("DAHA sum is not a Laurent polynomial; leftover denominator " + os.str());
    }
    r.num.shift(0, m - 1);
    r.num.add_to(&value, static_cast<int>(j));
  }
  SuperPolynomial sp;
  sp.knot = k;
  sp.value = value;
  sp.normalization = "ft^" + std::to_string(m - 1);
  return sp;
}

Poly daha_reduced(const TorusKnot& k, int symbolic_limit) {
  Poly p = daha_superpoly(k, symbolic_limit).value;
  Poly u = daha_superpoly(TorusKnot(1, 1), symbolic_limit).value;
  return exact_div(p, u);
}

Rational daha_at_point(const TorusKnot& k, const Rational& a, const Rational& q, const Rational& t) {
  const int m = k.m, n = k.n;
  auto mono = [&](QT e) -> Rational { return rpow(q, e.first) * rpow(t, e.second); };
  auto eval = [&](const FactoredTerm& f) {
    if (f.zero) return Rational(0);
    Rational v = f.sign * mono({f.mq, f.mt});
    for (const auto& [e, p] : f.binom) {
      Rational b = 1 - mono(e);
      if (b == 0) {
        if (p > 0) return Rational(0);
        throw PoleError("pole: factor (1 - q^" + std::to_string(e.first) + " t^" + std::to_string(e.second) +
                        ") vanishes");
      }
      v *= rpow(b, p);
    }
    return v;
  };
  Rational total = 0;
  for (const Partition& mu : partitions_of(n)) {
    Rational shape = eval(shape_term(mu, n));
    for (const auto& b : box_stats(mu)) shape *= 1 - a / mono(weight({b.row, b.col}));
    if (shape == 0) continue;
    Rational inner = 0;
    SytEnumerator it(mu);
    while (it.next()) inner += eval(tableau_term(it.current(), m, n));
    total += shape * inner;
  }
  return total * rpow(t, m - 1);
}

Poly specialize_homological(const Poly& p) {
  Poly out(homological_vars());
  for (const auto& [e, c] : p.terms()) {
    int A = e[0], Q = e[1], T = e[2];
    out.add_term(Exp{2 * A, 2 * Q + 2 * T, A + 2 * Q}, (A % 2) ? Rational(-c) : c);
  }
  return out;
}

Poly specialize_slN(const Poly& p, int N) {
  if (N < 1) throw InputError("sl(N) specialization needs N >= 1");
  Poly out(daha_vars());
  for (const auto& [e, c] : p.terms()) out.add_term(Exp{0, e[1], e[2] + N * e[0]}, c);
  return out;
}

}  // namespace tkh
