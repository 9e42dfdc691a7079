#include "tkh/koszul.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tkh/errors.hpp"
#include "tkh/series.hpp"

namespace tkh {

namespace {

std::vector<std::string> u_names(int M) {
  std::vector<std::string> v;
  for (int i = 1; i <= M; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

TruncatedSeries u_series(const std::vector<std::string>& vars, int first, int M, int order, bool with_one) {
  std::vector<Poly> c(static_cast<std::size_t>(order) + 1, Poly(vars));
  if (with_one) c[0] = Poly::constant(vars, 1);
  for (int i = first; i <= M && i <= order; ++i) c[static_cast<std::size_t>(i)] = Poly::variable(vars, vars[static_cast<std::size_t>(i - 1)]);
  return TruncatedSeries::from_coeffs(vars, c, order);
}

Poly restrict_low(Poly p, int r) {
  for (int i = 0; i < r; ++i) p = p.specialize(static_cast<std::size_t>(i), 0);
  return p;
}

SuperMonomial xi_monomial(const SuperRing& ring, int i) {
  SuperMonomial m = ring.one();
  m.xi = std::uint64_t{1} << (i - 1);
  return m;
}

// q-degree and xi count of a homogeneous element.
std::pair<int, int> component_of(const SuperRing& ring, const SuperRingElement& e) {
  const auto& first = e.terms().begin()->first;
  std::pair<int, int> key{ring.grading(first).q, first.xi_count()};
  for (const auto& [m, c] : e.terms()) {
    if (ring.grading(m).q != key.first || m.xi_count() != key.second)
      throw InternalError("relation is not homogeneous: " + e.str(ring));
  }
  return key;
}

}  // namespace

Poly potential(const TorusKnot& k, int r) {
  if (r < 1) throw InputError("color must be at least 1");
  const int mp = std::min(k.m, k.n);
  const int M = mp * r;
  const int order = (k.m + k.n) * r + 1;
  auto vars = u_names(M);
  TruncatedSeries f = u_series(vars, 1, M, order, true);
  TruncatedSeries g = series_pow(f, Rational(k.m + k.n, mp), order);
  return g[order];
}

ModuliRelations moduli_relations(const TorusKnot& k, int r, bool reduced) {
  const int M = std::min(k.m, k.n) * r;
  Poly W = potential(k, r);
  ModuliRelations rel;
  rel.ring = SuperRing::koszul(M, r, reduced ? r + 1 : 1);
  const int cut = reduced ? r : 0;
  std::vector<Poly> grad;
  for (int i = 1; i <= M; ++i) grad.push_back(W.derivative(static_cast<std::size_t>(i - 1)));
  for (int i = 1; i <= M; ++i) {
    Poly e = restrict_low(grad[static_cast<std::size_t>(i - 1)], cut);
    if (!e.is_zero()) rel.even.push_back(SuperRingElement::from_poly(e));
    SuperRingElement odd;
    for (int j = cut + 1; j <= M; ++j) {
      Poly h = restrict_low(grad[static_cast<std::size_t>(i - 1)].derivative(static_cast<std::size_t>(j - 1)), cut);
      if (h.is_zero()) continue;
      odd += SuperRingElement::from_poly(h) * SuperRingElement::monomial(xi_monomial(rel.ring, j));
    }
    if (!odd.is_zero()) rel.odd.push_back(odd);
  }
  return rel;
}

ModuliRelations coefficient_matching_relations(const TorusKnot& k, int r) {
  const int m = std::min(k.m, k.n), n = std::max(k.m, k.n);
  const int M = m * r;
  const int K = 2 * (m + n) * r + 2;
  auto vars = u_names(M);
  TruncatedSeries f = u_series(vars, r + 1, M, K, true);
  TruncatedSeries g = series_pow(f, Rational(n, m), K);
  ModuliRelations rel;
  rel.ring = SuperRing::koszul(M, r, r + 1);
  for (int z = n * r + 1; z <= K; ++z) {
    const Poly& c = g[z];
    if (c.is_zero()) continue;
    rel.even.push_back(SuperRingElement::from_poly(c));
    SuperRingElement odd;
    for (int j = r + 1; j <= M; ++j) {
      Poly h = c.derivative(static_cast<std::size_t>(j - 1));
      if (h.is_zero()) continue;
      odd += SuperRingElement::from_poly(h) * SuperRingElement::monomial(xi_monomial(rel.ring, j));
    }
    if (!odd.is_zero()) rel.odd.push_back(odd);
  }
  return rel;
}

QuotientModel QuotientModel::build(const ModuliRelations& rel, int q_cutoff, int hard_limit) {
  QuotientModel qm;
  qm.ring_ = rel.ring;
  const SuperRing& R = qm.ring_;
  const int M = R.M();
  std::vector<int> act;
  for (int i = R.first(); i <= M; ++i) act.push_back(i);

  struct Rel {
    SuperRingElement e;
    int q, k;
  };
  std::vector<Rel> rels;
  for (const auto* list : {&rel.even, &rel.odd})
    for (const auto& e : *list) {
      if (e.is_zero()) continue;
      auto [q, k] = component_of(R, e);
      rels.push_back({e, q, k});
    }

  // Monomials of a given q-degree and xi count, memoised.
  std::map<std::pair<int, int>, std::vector<SuperMonomial>> memo;
  std::function<const std::vector<SuperMonomial>&(int, int)> monos = [&](int q, int k) -> const std::vector<SuperMonomial>& {
    auto key = std::make_pair(q, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<SuperMonomial> out;
    if (q >= 0 && k >= 0 && (k == 0 || R.has_odd())) {
      // Choose the odd part, then fill the even part.
      std::vector<int> oddset;
      std::function<void(std::size_t, int, std::uint64_t)> pick_odd = [&](std::size_t from, int left, std::uint64_t mask) {
        if (left == 0) {
          int rest = q;
          for (int i : act)
            if ((mask >> (i - 1)) & 1u) rest -= R.xi_grading(i).q;
          if (rest < 0) return;
          SuperMonomial m = R.one();
          m.xi = mask;
          std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int rem) {
            if (idx == act.size()) {
              if (rem == 0) out.push_back(m);
              return;
            }
            int i = act[idx];
            int d = R.u_grading(i).q;
            auto& e = m.u[static_cast<std::size_t>(i - 1)];
            if (d <= 0) {
              if (d < 0) throw InternalError("non-positive u degree");
            }
            for (e = 0; e * d <= rem; ++e) fill(idx + 1, rem - e * d);
            e = 0;
          };
          fill(0, rest);
          return;
        }
        for (std::size_t j = from; j < act.size(); ++j)
          pick_odd(j + 1, left - 1, mask | (std::uint64_t{1} << (act[j] - 1)));
      };
      pick_odd(0, k, 0);
    }
    // The relations are not t_c-homogeneous, so t_c only filters the quotient.
    // Ordering by t_c first makes the basis compute the associated graded.
    std::sort(out.begin(), out.end(), [&](const SuperMonomial& a, const SuperMonomial& b) {
      int ta = R.grading(a).tc, tb = R.grading(b).tc;
      if (ta != tb) return ta > tb;
      return monomial_greater(a, b);
    });
    return memo.emplace(key, std::move(out)).first->second;
  };

  const int max_k = R.has_odd() ? static_cast<int>(act.size()) : 0;
  std::map<int, int> pure;  // generator -> smallest pure power in the ideal
  int bound = -1;
  int step = 0, max_deg = 0;
  {
    std::vector<int> degs;
    for (int i : act) {
      degs.push_back(R.u_grading(i).q);
      if (R.has_odd()) degs.push_back(R.xi_grading(i).q);
    }
    for (int d : degs) {
      step = std::gcd(step, d);
      max_deg = std::max(max_deg, d);
    }
    if (step == 0) step = 1;
  }
  int last_nonzero = -1;
  for (int q = 0;; q += step) {
    if (bound >= 0 && q > bound) {
      qm.max_q_ = bound;
      break;
    }
    if (q_cutoff >= 0 && q > q_cutoff) {
      qm.truncated_ = true;
      qm.max_q_ = q_cutoff;
      break;
    }
    if (q_cutoff < 0 && q > hard_limit)
      throw FinitenessError("quotient did not terminate below q-degree " + std::to_string(hard_limit));
    const std::size_t basis_before = qm.basis_.size();
    for (int k = 0; k <= max_k; ++k) {
      const auto& cols = monos(q, k);
      if (cols.empty()) continue;
      Component comp;
      comp.monos = cols;
      std::map<SuperMonomial, std::size_t> col;
      for (std::size_t c = 0; c < cols.size(); ++c) col.emplace(cols[c], c);
      std::vector<std::vector<Rational>> rows;
      for (const auto& rl : rels) {
        if (rl.q > q || rl.k > k) continue;
        for (const auto& mu : monos(q - rl.q, k - rl.k)) {
          SuperRingElement p = SuperRingElement::monomial(mu) * rl.e;
          if (p.is_zero()) continue;
          std::vector<Rational> row(cols.size());
          for (const auto& [m, c] : p.terms()) row[col.at(m)] = c;
          rows.push_back(std::move(row));
        }
      }
      Matrix A(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) A(i, j) = rows[i][j];
      comp.pivots = rref(A);
      Matrix trimmed(comp.pivots.size(), cols.size());
      for (std::size_t i = 0; i < comp.pivots.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) trimmed(i, j) = A(i, j);
      comp.rref = std::move(trimmed);
      comp.basis_index.assign(cols.size(), -1);
      std::vector<bool> is_pivot(cols.size(), false);
      for (auto p : comp.pivots) is_pivot[p] = true;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (is_pivot[c]) {
          if (k == 0) {
            int nz = 0, which = 0;
            for (int i : act)
              if (cols[c].u[static_cast<std::size_t>(i - 1)]) {
                ++nz;
                which = i;
              }
            if (nz == 1 && !pure.count(which)) pure[which] = cols[c].u[static_cast<std::size_t>(which - 1)];
          }
          continue;
        }
        comp.basis_index[c] = static_cast<int>(qm.basis_.size());
        qm.basis_.push_back(BasisElement{cols[c], R.grading(cols[c])});
      }
      qm.comps_.emplace(Key{q, k}, std::move(comp));
    }
    if (bound < 0 && pure.size() == act.size()) {
      bound = 0;
      for (int i : act) {
        bound += (pure[i] - 1) * R.u_grading(i).q;
        if (R.has_odd()) bound += R.xi_grading(i).q;
      }
    }
    // A monomial above a zero window of width max_deg is a multiple of one
    // inside it, so the quotient vanishes from there on.
    if (qm.basis_.size() > basis_before) last_nonzero = q;
    if (q >= last_nonzero + max_deg && (bound < 0 || q < bound)) bound = q;
  }
  if (bound >= 0 && q_cutoff >= 0 && bound <= q_cutoff) qm.truncated_ = false;
  return qm;
}

std::vector<Rational> QuotientModel::normal_form(const SuperRingElement& e) const {
  std::vector<Rational> out(basis_.size());
  std::map<Key, std::vector<std::pair<SuperMonomial, Rational>>> groups;
  for (const auto& [m, c] : e.terms()) groups[{ring_.grading(m).q, m.xi_count()}].push_back({m, c});
  for (const auto& [key, terms] : groups) {
    auto it = comps_.find(key);
    if (it == comps_.end()) {
      if (key.first > max_q_ && truncated_)
        throw CutoffError("normal form needed beyond the truncation degree");
      continue;  // above the proven bound: zero in the quotient
    }
    const Component& comp = it->second;
    std::vector<Rational> v(comp.monos.size());
    for (const auto& [m, c] : terms) {
      auto pos = std::find(comp.monos.begin(), comp.monos.end(), m);
      if (pos == comp.monos.end()) throw InternalError("monomial missing from its component");
      v[static_cast<std::size_t>(pos - comp.monos.begin())] += c;
    }
    for (std::size_t r = 0; r < comp.pivots.size(); ++r) {
      std::size_t p = comp.pivots[r];
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (comp.rref(r, j) != 0) v[j] -= f * comp.rref(r, j);
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      if (comp.basis_index[j] < 0) throw InternalError("normal form left a pivot entry");
      out[static_cast<std::size_t>(comp.basis_index[j])] += v[j];
    }
  }
  return out;
}

bool QuotientModel::in_ideal(const SuperRingElement& e) const {
  for (const auto& x : normal_form(e))
    if (x != 0) return false;
  return true;
}

Poly QuotientModel::poincare() const {
  const std::vector<std::string> v{"a", "q", "tr", "tc"};
  Poly p(v);
  for (const auto& b : basis_) p.add_term(Exp{b.deg.a, b.deg.q, b.deg.tr, b.deg.tc}, 1);
  return p;
}

std::map<std::pair<int, int>, int> QuotientModel::bidegree_dims() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& b : basis_) out[{b.deg.a, b.deg.q}]++;
  return out;
}

std::string Differential::str() const {
  std::ostringstream os;
  switch (kind) {
    case DiffKind::dN:
      os << "d_" << param;
      break;
    case DiffKind::colored_plus:
      os << "d+_(" << color << ")->(" << param << ")";
      break;
    case DiffKind::colored_minus:
      os << "d-_(" << color << ")->(" << param << ")";
      break;
  }
  return os.str();
}

Differential parse_differential(const std::string& spec, int color) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("differential must look like dN:K, colored+:K or colored-:K");
  std::string kind = spec.substr(0, colon);
  Differential d;
  d.color = color;
  try {
    d.param = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw InputError("bad differential parameter in '" + spec + "'");
  }
  if (kind == "dN") d.kind = DiffKind::dN;
  else if (kind == "colored+") d.kind = DiffKind::colored_plus;
  else if (kind == "colored-") d.kind = DiffKind::colored_minus;
  else throw InputError("unknown differential '" + kind + "'");
  if (d.kind != DiffKind::dN && (d.param < 0 || d.param >= color))
    throw InputError("colored differential needs 0 <= k < r");
  return d;
}

SuperRingElement differential_on_xi(const SuperRing& ring, const Differential& d, int i) {
  auto u = [&](int j) {
    SuperRingElement e;
    if (j == 0) return SuperRingElement::monomial(ring.one());
    if (!ring.active(j)) return e;
    SuperMonomial m = ring.one();
    m.u[static_cast<std::size_t>(j - 1)] = 1;
    return SuperRingElement::monomial(m);
  };
  switch (d.kind) {
    case DiffKind::dN: {
      const int N = d.param;
      if (N < 0) return N + i - 1 == 0 ? SuperRingElement::monomial(ring.one()) : SuperRingElement();
      if (N == 0) return i - 1 >= 0 ? u(i - 1) : SuperRingElement();
      // Ordered tuples j_1 + ... + j_N = N + i - 1 with j >= 1.
      const int order = N + i - 1;
      auto vars = ring.u_vars();
      TruncatedSeries g = u_series(vars, ring.first(), ring.M(), order, false);
      TruncatedSeries p = g;
      for (int k = 1; k < N; ++k) p = series_mul(p, g);
      return SuperRingElement::from_poly(p[order]);
    }
    case DiffKind::colored_plus:
      return i - d.param >= 0 ? u(i - d.param) : SuperRingElement();
    case DiffKind::colored_minus:
      return i == d.color + d.param + 1 ? SuperRingElement::monomial(ring.one()) : SuperRingElement();
  }
  return SuperRingElement();
}

namespace {

// Odd derivation with d(u) = 0, applied to one monomial.
SuperRingElement apply_on_monomial(const SuperRing& ring, const SuperMonomial& m,
                                   const std::map<int, SuperRingElement>& dxi) {
  SuperRingElement out;
  int pos = 0;
  for (int i = 1; i <= ring.M(); ++i) {
    if (!((m.xi >> (i - 1)) & 1u)) continue;
    SuperMonomial rest = m;
    rest.xi &= ~(std::uint64_t{1} << (i - 1));
    SuperRingElement t = dxi.at(i) * SuperRingElement::monomial(rest);
    if (pos % 2) t *= Rational(-1);
    out += t;
    ++pos;
  }
  return out;
}

SuperRingElement apply_on(const SuperRing& ring, const SuperRingElement& e, const std::map<int, SuperRingElement>& dxi) {
  SuperRingElement out;
  for (const auto& [m, c] : e.terms()) {
    SuperRingElement t = apply_on_monomial(ring, m, dxi);
    t *= c;
    out += t;
  }
  return out;
}

}  // namespace

HomologyReport apply_differential(const QuotientModel& model, const Differential& d, const ModuliRelations& rel) {
  if (model.truncated()) throw CutoffError("differentials need a finite (untruncated) model");
  const SuperRing& R = model.ring();
  std::map<int, SuperRingElement> dxi;
  for (int i = 1; i <= R.M(); ++i) dxi[i] = R.active(i) ? differential_on_xi(R, d, i) : SuperRingElement();
  const auto& B = model.basis();
  const std::size_t n = B.size();
  Matrix D(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto img = model.normal_form(apply_on_monomial(R, B[j].mono, dxi));
    for (std::size_t i = 0; i < n; ++i) D(i, j) = img[i];
  }
  HomologyReport rep;
  rep.dimension = static_cast<int>(n);
  rep.d_squared_zero = (D * D).is_zero();
  if (!rep.d_squared_zero) throw ModelError(d.str() + " does not square to zero on the quotient");
  for (const auto& g : rel.odd)
    if (!model.in_ideal(apply_on(R, g, dxi))) rep.ideal_preserved = false;
  rep.rank = static_cast<int>(rank(D));
  rep.homology = rep.dimension - 2 * rep.rank;
  // Per source bidegree: dim - rank(out) - rank(in).
  std::map<std::pair<int, int>, std::vector<std::size_t>> idx;
  for (std::size_t j = 0; j < n; ++j) idx[{B[j].deg.a, B[j].deg.q}].push_back(j);
  for (const auto& [key, js] : idx) {
    Matrix out(n, js.size()), in(js.size(), n);
    for (std::size_t c = 0; c < js.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) {
        out(i, c) = D(i, js[c]);
        in(c, i) = D(js[c], i);
      }
    rep.by_bidegree[key] = static_cast<int>(js.size() - rank(out) - rank(in));
  }
  return rep;
}

Poly slN_potential(int N, int r, PotentialKind kind) {
  if (N < 1 || r < 1) throw InputError("slN_potential needs N >= 1 and r >= 1");
  auto vars = u_names(r);
  const int order = kind == PotentialKind::antisym ? N + 1 : N + r;
  TruncatedSeries f = u_series(vars, 1, r, order, true);
  TruncatedSeries L = series_log(f, order);
  Poly c = kind == PotentialKind::antisym ? L[order] : series_mul(f, L)[order];
  return N % 2 ? -c : c;
}

int jacobi_dim(const Poly& W) {
  std::vector<int> weights;
  for (const auto& v : W.vars()) {
    if (v.size() < 2 || v[0] != 'u') throw InputError("jacobi_dim expects variables u1, u2, ...");
    weights.push_back(2 * std::stoi(v.substr(1)));
  }
  ModuliRelations rel;
  rel.ring = SuperRing::even_only(weights);
  for (std::size_t i = 0; i < W.nvars(); ++i) {
    Poly g = W.derivative(i);
    if (!g.is_zero()) rel.even.push_back(SuperRingElement::from_poly(g));
  }
  try {
    return static_cast<int>(QuotientModel::build(rel).basis().size());
  } catch (const InternalError& e) {
    throw InputError(std::string("jacobi_dim needs a weighted-homogeneous potential: ") + e.what());
  }
}

}  // namespace tkh
