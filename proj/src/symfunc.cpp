#include "tkh/symfunc.hpp"

#include <functional>
#include <mutex>

#include "tkh/errors.hpp"

namespace tkh {

const std::vector<std::string>& sym_vars() {
  static const std::vector<std::string> v{"fq", "ft"};
  return v;
}

SymFunc SymFunc::basis_element(SymBasis b, const Partition& p) {
  SymFunc f;
  f.basis = b;
  f.coords[p] = RationalExpression(Poly::constant(sym_vars(), 1));
  return f;
}

void SymFunc::add(const Partition& p, const RationalExpression& c) {
  if (c.is_zero()) return;
  auto it = coords.find(p);
  if (it == coords.end()) {
    coords.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords.erase(it);
}

RationalExpression SymFunc::coeff(const Partition& p) const {
  auto it = coords.find(p);
  return it == coords.end() ? RationalExpression(Poly(sym_vars())) : it->second;
}

Integer powersum_to_monomial(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return 0;
  // Count maps from parts of mu to rows of lambda filling each row exactly.
  std::vector<int> room(lambda.parts);
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == mu.parts.size()) {
      count += 1;
      return;
    }
    for (auto& r : room) {
      if (r >= mu.parts[k]) {
        r -= mu.parts[k];
        rec(k + 1);
        r += mu.parts[k];
      }
    }
  };
  rec(0);
  return count;
}

namespace {

std::mutex cache_mutex;

int index_of(const std::vector<Partition>& ps, const Partition& p) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == p) return static_cast<int>(i);
  throw InternalError("partition not found: " + p.str());
}

Matrix invert(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InternalError("singular transition matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace

const Matrix& p_to_m_matrix(int n) {
  static std::map<int, Matrix> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ps = partitions_of(n);
  Matrix r(ps.size(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) r(i, j) = Rational(powersum_to_monomial(ps[i], ps[j]));
  return cache.emplace(n, std::move(r)).first->second;
}

const Matrix& m_to_p_matrix(int n) {
  static std::map<int, Matrix> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Matrix inv = invert(p_to_m_matrix(n));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, std::move(inv)).first->second;
}

Integer z_lambda(const Partition& lambda) {
  std::map<int, unsigned> mult;
  for (int x : lambda.parts) mult[x]++;
  Integer z = 1;
  for (const auto& [part, k] : mult) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), Integer(part).get_mpz_t(), k);
    z *= pk * factorial(k);
  }
  return z;
}

SymFunc to_powersum(const SymFunc& f) {
  if (f.basis == SymBasis::powersum) return f;
  if (f.basis == SymBasis::macdonald) throw InternalError("convert Macdonald coordinates with macdonald.hpp");
  SymFunc out;
  out.basis = SymBasis::powersum;
  for (const auto& [lam, c] : f.coords) {
    auto ps = partitions_of(lam.size());
    const Matrix& inv = m_to_p_matrix(lam.size());
    int i = index_of(ps, lam);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const Rational& x = inv(static_cast<std::size_t>(i), j);
      if (x != 0) out.add(ps[j], c * x);
    }
  }
  return out;
}

SymFunc to_monomial(const SymFunc& f) {
  if (f.basis == SymBasis::monomial) return f;
  if (f.basis == SymBasis::macdonald) throw InternalError("convert Macdonald coordinates with macdonald.hpp");
  SymFunc out;
  out.basis = SymBasis::monomial;
  for (const auto& [mu, c] : f.coords) {
    auto ps = partitions_of(mu.size());
    const Matrix& r = p_to_m_matrix(mu.size());
    int i = index_of(ps, mu);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const Rational& x = r(static_cast<std::size_t>(i), j);
      if (x != 0) out.add(ps[j], c * x);
    }
  }
  return out;
}

RationalExpression hall_pairing(const SymFunc& f, const SymFunc& g) {
  SymFunc a = to_powersum(f), b = to_powersum(g);
  const auto& v = sym_vars();
  RationalExpression total{Poly(v)};
  for (const auto& [lam, ca] : a.coords) {
    auto it = b.coords.find(lam);
    if (it == b.coords.end()) continue;
    RationalExpression w(Poly::constant(v, Rational(z_lambda(lam))));
    for (int part : lam.parts) {
      Poly num = Poly::constant(v, 1) - Poly::monomial(v, {part, 0});
      w *= num;
      w *= RationalExpression::binomial_inverse(v, {0, part});
    }
    total += ca * it->second * w;
  }
  return total.reduce();
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  const int n = std::max(lambda.length(), mu.length());
  if (n == 0) return 1;
  std::vector<std::string> xs;
  for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i + 1));
  auto alternant = [&](const std::vector<int>& e) {
    // det(x_i^{e_j}) by permutation expansion.
    Poly det(xs);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inv;
      Exp x(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) x[i] = e[perm[i]];
      det.add_term(x, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
  };
  std::vector<int> delta(static_cast<std::size_t>(n)), top(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    delta[i] = n - 1 - i;
    top[i] = lambda[i] + delta[i];
  }
  Poly s = exact_div(alternant(top), alternant(delta));
  Exp x(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) x[i] = mu[i];
  Rational c = s.coeff(x);
  return c.get_num();
}

}  // namespace tkh
