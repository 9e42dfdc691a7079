#include "tkh/superring.hpp"

#include <bit>
#include <sstream>
#include <tuple>

#include "tkh/errors.hpp"

namespace tkh {

int SuperMonomial::xi_count() const { return std::popcount(xi); }

bool monomial_greater(const SuperMonomial& a, const SuperMonomial& b) {
  for (std::size_t k = a.u.size(); k-- > 0;) {
    if (a.u[k] != b.u[k]) return a.u[k] > b.u[k];
  }
  for (int k = 63; k >= 0; --k) {
    bool x = (a.xi >> k) & 1u, y = (b.xi >> k) & 1u;
    if (x != y) return x;
  }
  return false;
}

SuperRing SuperRing::koszul(int M, int r, int first) {
  if (M > 63) throw ScaleError("too many odd generators");
  SuperRing R;
  R.M_ = M;
  R.first_ = first;
  for (int i = 1; i <= M; ++i) {
    int f = 2 * ((i - 1) / r);
    R.ug_.push_back(Grading{0, 2 * i, f, 2 * i - 2});
    R.xg_.push_back(Grading{2, 2 * i - 2, f + 1, 2 * i - 1});
  }
  return R;
}

SuperRing SuperRing::even_only(std::vector<int> q_degrees) {
  SuperRing R;
  R.M_ = static_cast<int>(q_degrees.size());
  R.first_ = 1;
  R.has_odd_ = false;
  for (int d : q_degrees) {
    R.ug_.push_back(Grading{0, d, 0, 0});
    R.xg_.push_back(Grading{});
  }
  return R;
}

Grading SuperRing::grading(const SuperMonomial& m) const {
  Grading g;
  for (int i = 1; i <= M_; ++i) {
    int e = m.u[static_cast<std::size_t>(i - 1)];
    if (e) {
      const Grading& x = ug_[static_cast<std::size_t>(i - 1)];
      g.a += e * x.a;
      g.q += e * x.q;
      g.tr += e * x.tr;
      g.tc += e * x.tc;
    }
    if ((m.xi >> (i - 1)) & 1u) {
      const Grading& x = xg_[static_cast<std::size_t>(i - 1)];
      g.a += x.a;
      g.q += x.q;
      g.tr += x.tr;
      g.tc += x.tc;
    }
  }
  return g;
}

std::string SuperRing::str(const SuperMonomial& m) const {
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= M_; ++i) {
    int e = m.u[static_cast<std::size_t>(i - 1)];
    if (!e) continue;
    if (any) os << "*";
    os << "u" << i;
    if (e != 1) os << "^" << e;
    any = true;
  }
  for (int i = 1; i <= M_; ++i) {
    if (!((m.xi >> (i - 1)) & 1u)) continue;
    if (any) os << "*";
    os << "xi" << i;
    any = true;
  }
  return any ? os.str() : "1";
}

std::vector<std::string> SuperRing::u_vars() const {
  std::vector<std::string> v;
  for (int i = 1; i <= M_; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

SuperMonomial SuperRing::one() const {
  SuperMonomial m;
  m.u.assign(static_cast<std::size_t>(M_), 0);
  return m;
}

bool multiply_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial* out, int* sign) {
  if (a.xi & b.xi) return false;
  out->u = a.u;
  for (std::size_t i = 0; i < b.u.size(); ++i) out->u[i] += b.u[i];
  out->xi = a.xi | b.xi;
  // Moving each xi of b left past the larger xi's of a.
  int swaps = 0;
  for (std::uint64_t x = b.xi; x; x &= x - 1) {
    int k = std::countr_zero(x);
    std::uint64_t above = k == 63 ? 0 : (a.xi >> (k + 1));
    swaps += std::popcount(above);
  }
  *sign = swaps % 2 ? -1 : 1;
  return true;
}

SuperRingElement SuperRingElement::monomial(const SuperMonomial& m, const Rational& c) {
  SuperRingElement e;
  e.add_term(m, c);
  return e;
}

SuperRingElement SuperRingElement::from_poly(const Poly& p) {
  SuperRingElement e;
  for (const auto& [x, c] : p.terms()) {
    SuperMonomial m;
    m.u = x;
    for (int v : x)
      if (v < 0) throw InternalError("negative exponent in a Koszul relation");
    e.add_term(m, c);
  }
  return e;
}

void SuperRingElement::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperRingElement& SuperRingElement::operator+=(const SuperRingElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperRingElement& SuperRingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SuperRingElement operator*(const SuperRingElement& a, const SuperRingElement& b) {
  SuperRingElement out;
  SuperMonomial m;
  int sign = 1;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (!multiply_monomials(ma, mb, &m, &sign)) continue;
      out.add_term(m, sign * ca * cb);
    }
  return out;
}

std::string SuperRingElement::str(const SuperRing& ring) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    std::string ms = ring.str(m);
    if (ms == "1") os << a.get_str();
    else if (a == 1) os << ms;
    else os << a.get_str() << "*" << ms;
  }
  return os.str();
}

}  // namespace tkh
