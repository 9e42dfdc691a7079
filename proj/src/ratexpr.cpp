#include "tkh/ratexpr.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

namespace {

Poly one_minus(const std::vector<std::string>& vars, const Exp& e) {
  Poly p = Poly::constant(vars, 1);
  p.add_term(e, -1);
  return p;
}

bool is_unit_poly(const Poly& p) { return p.is_zero() || (p.is_constant() && p.constant_term() == 1); }

// Necessary condition for (1 - x^e) | p: p vanishes at a point with x^e = 1.
bool passes_torus_filter(const Poly& p, const Exp& e) {
  const std::size_t n = e.size();
  std::vector<int> nz;
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] != 0) nz.push_back(static_cast<int>(i));
  std::vector<Rational> pt(n);
  static const int fill[] = {3, 5, 7, 11, 13, 17, 19, 23};
  for (std::size_t i = 0; i < n; ++i) pt[i] = fill[i % 8];
  if (nz.size() == 1) {
    pt[nz[0]] = 1;
  } else {
    int i = nz[0], j = nz[1];
    int g = std::gcd(std::abs(e[i]), std::abs(e[j]));
    int ci = e[j] / g, cj = -e[i] / g;
    pt[i] = rpow(Rational(2), ci);
    pt[j] = rpow(Rational(2), cj);
    for (std::size_t k = 2; k < nz.size(); ++k) pt[nz[k]] = 1;
  }
  return p.evaluate(pt) == 0;
}

}  // namespace

Exp canonical_binomial(const Exp& e, bool* flipped) {
  *flipped = false;
  for (int x : e) {
    if (x == 0) continue;
    if (x < 0) {
      *flipped = true;
      Exp f = e;
      for (int& y : f) y = -y;
      return f;
    }
    return e;
  }
  throw PoleError("binomial 1 - x^0 vanishes identically");
}

BinomialFactorization factor_binomials(const Poly& p) {
  if (p.is_zero()) throw PoleError("zero denominator");
  BinomialFactorization out;
  const std::size_t n = p.nvars();
  out.monomial = p.min_exponents();
  Exp neg = out.monomial;
  for (int& x : neg) x = -x;
  Poly rem = p.shifted(neg);

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (rem.max_degree(i) > 0) active.push_back(i);

  if (!rem.is_monomial() && !active.empty() && active.size() <= 3) {
    std::vector<int> span(n, 0);
    std::size_t count = 1;
    for (auto i : active) {
      span[i] = rem.max_degree(i);
      count *= static_cast<std::size_t>(2 * span[i] + 1);
    }
    if (count <= 200000) {
      std::vector<Exp> cands;
      Exp e(n, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == active.size()) {
          bool flipped = false;
          bool nonzero = false;
          for (int x : e) nonzero = nonzero || x != 0;
          if (!nonzero) return;
          Exp c = canonical_binomial(e, &flipped);
          if (!flipped) cands.push_back(c);
          return;
        }
        std::size_t i = active[k];
        for (int v = -span[i]; v <= span[i]; ++v) {
          e[i] = v;
          rec(k + 1);
        }
        e[i] = 0;
      };
      rec(0);
      auto size_of = [](const Exp& x) {
        int s = 0;
        for (int y : x) s += std::abs(y);
        return s;
      };
      std::stable_sort(cands.begin(), cands.end(),
                       [&](const Exp& a, const Exp& b) { return size_of(a) > size_of(b); });
      for (const Exp& c : cands) {
        bool fits = true;
        for (auto i : active) {
          int need = std::abs(c[i]);
          if (need > rem.max_degree(i) - rem.min_degree(i)) fits = false;
        }
        if (!fits) continue;
        while (!rem.is_monomial() && passes_torus_filter(rem, c)) {
          Poly q;
          if (!try_exact_div(rem, one_minus(p.vars(), c), &q)) break;
          rem = q;
          out.factors[c] += 1;
        }
        if (rem.is_monomial()) break;
      }
    }
  }
  // Normalise what is left.
  Exp m = rem.min_exponents();
  for (std::size_t i = 0; i < n; ++i) out.monomial[i] += m[i];
  for (int& x : m) x = -x;
  rem = rem.shifted(m);
  if (rem.is_monomial()) {
    out.unit = rem.leading().second;
    out.rest = Poly(p.vars());
  } else {
    out.unit = 1;
    out.rest = rem;
  }
  return out;
}

RationalExpression::RationalExpression(Poly num) : num_(std::move(num)) {}

RationalExpression::RationalExpression(const Poly& num, const Poly& den) : num_(num) {
  if (num_.vars().empty() && !den.vars().empty()) num_ = Poly(den.vars());
  absorb_denominator(den);
}

RationalExpression RationalExpression::binomial_inverse(const std::vector<std::string>& vars, const Exp& e,
                                                        int power) {
  RationalExpression r(Poly::constant(vars, 1));
  r.add_binomial(e, power);
  return r;
}

void RationalExpression::add_binomial(Exp e, int power) {
  if (power <= 0) throw InternalError("add_binomial expects a positive power");
  bool flipped = false;
  Exp c = canonical_binomial(e, &flipped);
  if (flipped) {
    // 1/(1 - x^e) = -x^{-e} / (1 - x^{-e})
    Exp sh = c;
    for (int& x : sh) x *= power;
    num_ = num_.shifted(sh);
    if (power % 2) num_ = -num_;
  }
  factors_[c] += power;
}

void RationalExpression::absorb_denominator(const Poly& den) {
  BinomialFactorization f = factor_binomials(den);
  Exp neg = f.monomial;
  for (int& x : neg) x = -x;
  num_ = num_.shifted(neg) * (1 / f.unit);
  for (const auto& [e, k] : f.factors) factors_[e] += k;
  if (!f.rest.is_zero()) rest_ = rest_.is_zero() ? f.rest : rest_ * f.rest;
}

Poly RationalExpression::denominator() const {
  Poly d = Poly::constant(num_.vars(), 1);
  for (const auto& [e, k] : factors_) d *= one_minus(num_.vars(), e).pow(static_cast<unsigned>(k));
  if (!rest_.is_zero()) d *= rest_;
  return d;
}

RationalExpression RationalExpression::operator-() const {
  RationalExpression r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalExpression& RationalExpression::operator+=(const RationalExpression& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) {
    *this = o;
    return *this;
  }
  if (vars() != o.vars()) throw InternalError("RationalExpression: variable lists differ");
  const auto& vars = num_.vars();
  Factors lcm = factors_;
  for (const auto& [e, k] : o.factors_) lcm[e] = std::max(lcm[e], k);
  Poly a = num_, b = o.num_;
  for (const auto& [e, k] : lcm) {
    auto ia = factors_.find(e);
    int ka = ia == factors_.end() ? 0 : ia->second;
    auto ib = o.factors_.find(e);
    int kb = ib == o.factors_.end() ? 0 : ib->second;
    if (k > ka) a *= one_minus(vars, e).pow(static_cast<unsigned>(k - ka));
    if (k > kb) b *= one_minus(vars, e).pow(static_cast<unsigned>(k - kb));
  }
  if (!(rest_ == o.rest_)) {
    if (!o.rest_.is_zero()) a *= o.rest_;
    if (!rest_.is_zero()) b *= rest_;
    if (rest_.is_zero()) rest_ = o.rest_;
    else if (!o.rest_.is_zero()) rest_ = rest_ * o.rest_;
  }
  num_ = a + b;
  factors_ = std::move(lcm);
  if (num_.is_zero()) {
    factors_.clear();
    rest_ = Poly();
    num_ = Poly(vars);
  }
  return *this;
}

RationalExpression& RationalExpression::operator-=(const RationalExpression& o) { return *this += -o; }

RationalExpression& RationalExpression::operator*=(const RationalExpression& o) {
  if (num_.vars().empty()) num_ = Poly(o.vars());
  num_ *= o.num_;
  for (const auto& [e, k] : o.factors_) factors_[e] += k;
  if (!o.rest_.is_zero()) rest_ = rest_.is_zero() ? o.rest_ : rest_ * o.rest_;
  if (num_.is_zero()) {
    factors_.clear();
    rest_ = Poly();
  }
  return *this;
}

RationalExpression& RationalExpression::operator*=(const Poly& p) {
  num_ *= p;
  if (num_.is_zero()) {
    factors_.clear();
    rest_ = Poly();
  }
  return *this;
}

RationalExpression& RationalExpression::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) {
    factors_.clear();
    rest_ = Poly();
  }
  return *this;
}

RationalExpression RationalExpression::operator/(const RationalExpression& o) const {
  if (o.num_.is_zero()) throw PoleError("division by zero rational expression");
  RationalExpression inv(o.denominator());
  inv.absorb_denominator(o.num_);
  RationalExpression r = *this;
  r *= inv;
  return r;
}

RationalExpression& RationalExpression::reduce() {
  if (num_.is_zero()) {
    factors_.clear();
    rest_ = Poly();
    return *this;
  }
  const auto& vars = num_.vars();
  for (auto it = factors_.begin(); it != factors_.end();) {
    Poly d = one_minus(vars, it->first);
    while (it->second > 0) {
      Poly q;
      if (!try_exact_div(num_, d, &q)) break;
      num_ = std::move(q);
      --it->second;
    }
    if (it->second == 0) it = factors_.erase(it);
    else ++it;
  }
  if (!rest_.is_zero()) {
    if (rest_.is_constant()) {
      num_ *= 1 / rest_.constant_term();
      rest_ = Poly();
    } else {
      Poly q;
      if (try_exact_div(num_, rest_, &q)) {
        num_ = std::move(q);
        rest_ = Poly();
      }
    }
  }
  return *this;
}

bool RationalExpression::try_to_poly(Poly* out) const {
  Poly cur = num_;
  const auto& vars = num_.vars();
  for (const auto& [e, k] : factors_) {
    Poly d = one_minus(vars, e);
    for (int i = 0; i < k; ++i) {
      Poly q;
      if (!try_exact_div(cur, d, &q)) return false;
      cur = std::move(q);
    }
  }
  if (!rest_.is_zero() && !is_unit_poly(rest_)) {
    Poly q;
    if (!try_exact_div(cur, rest_, &q)) return false;
    cur = std::move(q);
  }
  *out = std::move(cur);
  return true;
}

Poly RationalExpression::to_poly() const {
  Poly out;
  if (!try_to_poly(&out)) throw DivisionError("rational expression is not a Laurent polynomial", str());
  return out;
}

Rational RationalExpression::evaluate(const std::vector<Rational>& point) const {
  Rational den = 1;
  const auto& vars = num_.vars();
  for (const auto& [e, k] : factors_) {
    Rational v = one_minus(vars, e).evaluate(point);
    if (v == 0) throw PoleError("pole: factor (" + one_minus(vars, e).str() + ") vanishes");
    den *= rpow(v, k);
  }
  if (!rest_.is_zero()) {
    Rational v = rest_.evaluate(point);
    if (v == 0) throw PoleError("pole: factor (" + rest_.str() + ") vanishes");
    den *= v;
  }
  return num_.evaluate(point) / den;
}

bool equal(const RationalExpression& a, const RationalExpression& b) {
  RationalExpression d = a;
  if (a.num_.is_zero() && b.num_.is_zero()) return true;
  d -= b;
  return d.num_.is_zero();
}

RationalExpression RationalExpression::embed(const std::vector<std::string>& target) const {
  RationalExpression r;
  r.num_ = num_.embed(target);
  if (!rest_.is_zero()) r.rest_ = rest_.embed(target);
  for (const auto& [e, k] : factors_) {
    Exp f = Poly::monomial(num_.vars(), e).embed(target).leading().first;
    r.factors_[f] += k;
  }
  return r;
}

RationalExpression RationalExpression::map_exponents(const std::vector<std::string>& target,
                                                     const std::function<Exp(const Exp&)>& f) const {
  RationalExpression r(num_.map_exponents(target, f));
  if (!rest_.is_zero()) r.absorb_denominator(rest_.map_exponents(target, f));
  for (const auto& [e, k] : factors_) {
    Exp img = f(e);
    bool nz = false;
    for (int x : img) nz = nz || x != 0;
    if (!nz) throw PoleError("substitution sends a denominator factor to zero");
    r.add_binomial(img, k);
  }
  return r;
}

std::string RationalExpression::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  if (!factors_.empty() || !rest_.is_zero()) {
    os << "/(";
    bool first = true;
    for (const auto& [e, k] : factors_) {
      if (!first) os << "*";
      first = false;
      os << "(" << one_minus(num_.vars(), e).str() << ")";
      if (k != 1) os << "^" << k;
    }
    if (!rest_.is_zero()) {
      if (!first) os << "*";
      os << "(" << rest_.str() << ")";
    }
    os << ")";
  }
  return os.str();
}

}  // namespace tkh
