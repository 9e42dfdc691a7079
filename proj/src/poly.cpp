#include "tkh/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

Poly::Poly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw InternalError("exponent length mismatch");
    if (c != 0) terms_.emplace(e, c);
  }
}

Poly Poly::constant(const std::vector<std::string>& vars, const Rational& c) {
  Poly p(vars);
  if (c != 0) p.terms_.emplace(Exp(vars.size(), 0), c);
  return p;
}

Poly Poly::monomial(const std::vector<std::string>& vars, const Exp& e, const Rational& c) {
  if (e.size() != vars.size()) throw InternalError("exponent length mismatch");
  Poly p(vars);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::variable(const std::vector<std::string>& vars, const std::string& name, int power) {
  Exp e(vars.size(), 0);
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InternalError("unknown variable " + name);
  e[it - vars.begin()] = power;
  return monomial(vars, e);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

int Poly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Rational Poly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Exp(vars_.size(), 0)); }

void Poly::add_term(const Exp& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_vars(const Poly& o) const {
  if (vars_ != o.vars_) throw InternalError("variable lists differ: " + str() + " vs " + o.str());
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && vars_.empty()) vars_ = o.vars_;
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && vars_.empty()) vars_ = o.vars_;
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return Poly(a.vars_.empty() ? b.vars_ : a.vars_);
  }
  a.require_same_vars(b);
  Poly out(a.vars_);
  const std::size_t n = a.vars_.size();
  Exp e(n);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned k) const {
  Poly out = constant(vars_, 1);
  Poly b = *this;
  while (k) {
    if (k & 1u) out *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return out;
}

Poly Poly::shifted(const Exp& s) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

int Poly::max_degree(std::size_t var) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Poly::min_degree(std::size_t var) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

Exp Poly::min_exponents() const {
  Exp m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

Poly Poly::coefficient_in(std::size_t var, int k) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exp f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Poly Poly::embed(const std::vector<std::string>& target) const {
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it != target.end()) where[i] = static_cast<int>(it - target.begin());
  }
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exp f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw InternalError("cannot drop variable " + vars_[i]);
      f[where[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::substitute(const std::vector<std::string>& target, const std::vector<Poly>& images) const {
  if (images.size() != vars_.size()) throw InternalError("substitute: image count mismatch");
  // Cache powers per variable.
  std::vector<std::map<int, Poly>> cache(vars_.size());
  auto power = [&](std::size_t i, int k) -> const Poly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    Poly v;
    if (k >= 0) {
      v = images[i].embed(target).pow(static_cast<unsigned>(k));
    } else {
      const Poly& img = images[i];
      if (!img.is_monomial()) throw InternalError("negative power of a non-monomial image");
      Exp e = img.leading().first;
      for (int& x : e) x = -x;
      Poly inv = monomial(img.vars(), e, 1 / img.leading().second);
      v = inv.embed(target).pow(static_cast<unsigned>(-k));
    }
    return cache[i].emplace(k, std::move(v)).first->second;
  };
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

Poly Poly::map_exponents(const std::vector<std::string>& target,
                         const std::function<Exp(const Exp&)>& f) const {
  Poly out(target);
  for (const auto& [e, c] : terms_) out.add_term(f(e), c);
  return out;
}

Poly Poly::specialize(std::size_t var, const Rational& value) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    f[var] = 0;
    out.add_term(f, c * rpow(value, e[var]));
  }
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw InternalError("evaluate: point dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= rpow(point[i], e[i]);
    total += t;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    if (a != 1 || unit) os << a.get_str();
    bool need_star = a != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

bool try_exact_div(const Poly& p, const Poly& d, Poly* q) {
  if (d.is_zero()) throw InternalError("division by zero polynomial");
  Poly rem = p;
  Poly quot(d.vars());
  if (p.is_zero()) {
    *q = quot;
    return true;
  }
  if (p.vars() != d.vars()) throw InternalError("exact_div: variable lists differ");
  const std::size_t n = d.nvars();
  // Degree box the quotient must live in.
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = p.min_degree(i) - d.min_degree(i);
    hi[i] = p.max_degree(i) - d.max_degree(i);
    if (lo[i] > hi[i]) {
      *q = rem;
      return false;
    }
  }
  const auto& [dl, dc] = d.leading();
  Exp e(n);
  while (!rem.is_zero()) {
    const auto& [rl, rc] = rem.leading();
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = rl[i] - dl[i];
      if (e[i] < lo[i] || e[i] > hi[i]) {
        *q = rem;
        return false;
      }
    }
    Rational c = rc / dc;
    quot.add_term(e, c);
    for (const auto& [de, dcc] : d.terms()) {
      Exp f(n);
      for (std::size_t i = 0; i < n; ++i) f[i] = de[i] + e[i];
      rem.add_term(f, -c * dcc);
    }
  }
  *q = quot;
  return true;
}

Poly exact_div(const Poly& p, const Poly& d) {
  Poly q;
  if (!try_exact_div(p, d, &q)) throw DivisionError("exact division failed", q.str());
  return q;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace tkh
