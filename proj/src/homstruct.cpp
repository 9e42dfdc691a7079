#include "tkh/homstruct.hpp"

#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

namespace {

const std::vector<std::string>& aq_vars() {
  static const std::vector<std::string> v{"a", "q"};
  return v;
}

const std::vector<std::string>& aqt_vars() {
  static const std::vector<std::string> v{"a", "q", "t"};
  return v;
}

std::string quad_str(const Quad& g) {
  std::ostringstream os;
  os << "(" << g[0] << "," << g[1] << "," << g[2] << "," << g[3] << ")";
  return os.str();
}

Poly mono(const std::vector<std::string>& v, Exp e, const Rational& c = 1) { return Poly::monomial(v, e, c); }

Poly from_terms(const std::vector<std::string>& v, const std::vector<Exp>& terms) {
  Poly p(v);
  for (const auto& e : terms) p.add_term(e, 1);
  return p;
}

// -a^2 Q^2 t_r^3 t_c^{2r+1}
Poly pochhammer_x(int r) { return mono(tilde_vars(), {2, 2, 3, 2 * r + 1}, -1); }

Poly tc_pow(int e) { return mono(tilde_vars(), {0, 0, 0, e}); }

Poly invert_monomial(const Poly& m) {
  if (!m.is_monomial()) throw InternalError("expected a monomial");
  Exp e = m.leading().first;
  for (int& x : e) x = -x;
  return mono(m.vars(), e, 1 / m.leading().second);
}

}  // namespace

const std::vector<std::string>& tilde_vars() {
  static const std::vector<std::string> v{"a", "Q", "tr", "tc"};
  return v;
}

const std::vector<std::string>& plain_vars() {
  static const std::vector<std::string> v{"a", "q", "tr", "tc"};
  return v;
}

int QuadGradedSpace::dimension() const {
  int d = 0;
  for (const auto& [g, m] : gens) d += m;
  return d;
}

Poly QuadGradedSpace::poincare() const {
  Poly p(tilde ? tilde_vars() : plain_vars());
  for (const auto& [g, m] : gens) p.add_term(Exp(g.begin(), g.end()), m);
  return p;
}

QuadGradedSpace QuadGradedSpace::from_poincare(const Poly& p, int r, int rho, bool tilde) {
  if (r < 1 || rho < 1) throw InputError("color must be a nonempty rectangle");
  QuadGradedSpace s;
  s.r = r;
  s.rho = rho;
  s.tilde = tilde;
  Poly q = p.is_zero() ? Poly(tilde ? tilde_vars() : plain_vars()) : p;
  if (q.nvars() != 4) throw GradingError("quadruply graded data needs four variables");
  for (const auto& [e, c] : q.terms()) {
    if (c < 0 || c.get_den() != 1) throw GradingError("generator multiplicity must be a positive integer, got " + c.get_str());
    s.gens[Quad{e[0], e[1], e[2], e[3]}] += static_cast<int>(c.get_num().get_si());
  }
  return s;
}

QuadGradedSpace QuadGradedSpace::uncolored(const Poly& p) {
  Poly q = p.embed(aqt_vars());
  Poly quad = q.map_exponents(tilde_vars(), [](const Exp& e) { return Exp{e[0], e[1], e[2], e[2]}; });
  return from_poincare(quad, 1, 1, true);
}

QuadGradedSpace regrade(const QuadGradedSpace& s, RegradeDirection dir) {
  QuadGradedSpace out = s;
  out.gens.clear();
  if (dir == RegradeDirection::to_tilde) {
    if (s.tilde) return s;
    out.tilde = true;
    for (const auto& [g, m] : s.gens) {
      int num = g[1] + g[2] - g[3];
      if (num % s.rho) throw GradingError("non-integral Q-grading for generator " + quad_str(g));
      out.gens[Quad{g[0], num / s.rho, g[2], g[3]}] += m;
    }
  } else {
    if (!s.tilde) return s;
    out.tilde = false;
    for (const auto& [g, m] : s.gens) out.gens[Quad{g[0], s.rho * g[1] - g[2] + g[3], g[2], g[3]}] += m;
  }
  return out;
}

Rational delta_grading(const Quad& g, bool tilde) {
  // a + q/2 - (t_r + t_c)/2 = a + Q/2 - t_r
  Rational d = tilde ? Rational(g[1], 2) - g[2] : Rational(g[1] - g[2] - g[3], 2);
  d.canonicalize();
  return d + g[0];
}

VerifyReport verify_self_symmetry(const QuadGradedSpace& s) {
  VerifyReport rep;
  rep.property = "self-symmetry";
  if (!s.tilde) throw InputError("self-symmetry is stated for tilde data");
  rep.pass = true;
  for (const auto& [g, m] : s.gens) {
    Quad img{g[0], -g[1], g[2] - s.rho * g[1], g[3] - s.r * g[1]};
    auto it = s.gens.find(img);
    if (it == s.gens.end() || it->second != m) {
      rep.pass = false;
      rep.offending.push_back(quad_str(g) + " -> " + quad_str(img));
    }
  }
  return rep;
}

VerifyReport verify_mirror(const QuadGradedSpace& s, const QuadGradedSpace& other) {
  VerifyReport rep;
  rep.property = "mirror";
  if (!s.tilde || !other.tilde) throw InputError("mirror symmetry is stated for tilde data");
  if (other.r != s.rho || other.rho != s.r) {
    rep.offending.push_back("colors are not transposes of each other");
    return rep;
  }
  std::map<Quad, int> swapped;
  for (const auto& [g, m] : other.gens) swapped[Quad{g[0], g[1], g[3], g[2]}] += m;
  for (const auto& [g, m] : s.gens) {
    auto it = swapped.find(g);
    if (it == swapped.end() || it->second != m) rep.offending.push_back(quad_str(g));
  }
  for (const auto& [g, m] : swapped)
    if (!s.gens.count(g)) rep.offending.push_back(quad_str(g));
  rep.pass = rep.offending.empty();
  return rep;
}

VerifyReport verify_growth(const QuadGradedSpace& s, const QuadGradedSpace& base) {
  VerifyReport rep;
  rep.property = "growth";
  if (!s.tilde || !base.tilde) throw InputError("refined exponential growth is stated for tilde data");
  auto at_tc1 = [](const Poly& p) { return p.specialize(3, 1); };
  Poly lhs = at_tc1(s.poincare());
  Poly rhs = at_tc1(base.poincare()).pow(static_cast<unsigned>(s.r));
  Poly diff = lhs - rhs;
  rep.pass = diff.is_zero();
  for (const auto& [e, c] : diff.terms()) rep.offending.push_back("a^" + std::to_string(e[0]) + " Q^" + std::to_string(e[1]) +
                                                                   " tr^" + std::to_string(e[2]) + ": " + c.get_str());
  return rep;
}

VerifyReport verify_thin(const QuadGradedSpace& s) {
  VerifyReport rep;
  rep.property = "thin";
  rep.pass = true;
  for (const auto& [g, m] : s.gens) {
    Rational d = delta_grading(g, s.tilde);
    if (!rep.delta) rep.delta = d;
    else if (*rep.delta != d) {
      rep.pass = false;
      rep.offending.push_back(quad_str(g) + " has delta " + d.get_str());
    }
  }
  return rep;
}

Poly decategorify_poly(const Poly& p) {
  Poly out(aq_vars());
  for (const auto& [e, c] : p.terms()) out.add_term(Exp{e[0], e[1] - e[2] + e[3]}, e[2] % 2 ? Rational(-c) : c);
  return out;
}

Poly decategorify(const QuadGradedSpace& s) { return decategorify_poly(regrade(s, RegradeDirection::to_tilde).poincare()); }

Poly pochhammer(const Poly& x, const Poly& b, int k) {
  if (k < 0) throw InputError("Pochhammer length must be nonnegative");
  Poly one = Poly::constant(x.vars(), 1);
  Poly out = one, f = x;
  for (int i = 0; i < k; ++i) {
    out *= one - f;
    f *= b;
  }
  return out;
}

Poly gaussian_binomial(int r, int k, const Poly& b) {
  if (k < 0 || k > r) throw InputError("Gaussian binomial needs 0 <= k <= r");
  Poly one = Poly::constant(b.vars(), 1);
  // prod_{i=1..k} (1 - b^{r-k+i}) / (1 - b^i)
  Poly num = one, den = one;
  for (int i = 1; i <= k; ++i) {
    num *= one - b.pow(static_cast<unsigned>(r - k + i));
    den *= one - b.pow(static_cast<unsigned>(i));
  }
  return exact_div(num, den);
}

KnotId parse_knot_id(const std::string& s) {
  if (s == "6_2" || s == "62") return KnotId::k6_2;
  if (s == "6_3" || s == "63") return KnotId::k6_3;
  throw InputError("unknown knot '" + s + "' (expected 6_2 or 6_3)");
}

std::string knot_id_str(KnotId k) { return k == KnotId::k6_2 ? "6_2" : "6_3"; }

Poly colored_superpoly_62_63_poly(KnotId knot, int r) {
  if (r < 0) throw InputError("color must be nonnegative");
  const auto& v = tilde_vars();
  Poly b = tc_pow(2);
  Poly out(v);
  for (int k = 0; k <= r; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        Poly term(v);
        if (knot == KnotId::k6_2) {
          // (-1)^{r-k} Q^{2(i+j-k)} t_r^{i+j-k-r} t_c^{i^2-j^2+2jk-2kr+k-r}
          term = mono(v, {0, 2 * (i + j - k), i + j - k - r, i * i - j * j + 2 * j * k - 2 * k * r + k - r},
                      (r - k) % 2 ? -1 : 1);
        } else {
          // a^{-2k} Q^{2(i-2j+k)} t_r^{i-2j-k} t_c^{i^2+k(-2j+k-2r)}
          term = mono(v, {-2 * k, 2 * (i - 2 * j + k), i - 2 * j - k, i * i + k * (-2 * j + k - 2 * r)});
        }
        term *= gaussian_binomial(r, k, b) * gaussian_binomial(k, j, b) * gaussian_binomial(j, i, b);
        // (-a^2 Q^-2 t_r t_c; t_c^2)_j (-a^2 Q^-2 t_r t_c^{2i+1}; t_c^2)_{k-j} (-a^2 Q^2 t_r^3 t_c^{2r+1}; t_c^2)_k
        term *= pochhammer(mono(v, {2, -2, 1, 1}, -1), b, j);
        term *= pochhammer(mono(v, {2, -2, 1, 2 * i + 1}, -1), b, k - j);
        term *= pochhammer(pochhammer_x(r), b, k);
        out += term;
      }
  return out;
}

QuadGradedSpace colored_superpoly_62_63(KnotId knot, int r) {
  Poly p = colored_superpoly_62_63_poly(knot, r);
  for (const auto& [e, c] : p.terms())
    if (c < 0) throw FormulaError("negative coefficient in the " + knot_id_str(knot) + " formula at r=" + std::to_string(r));
  return QuadGradedSpace::from_poincare(p, r, 1, true);
}

Poly uncolored_62_63(KnotId knot) {
  const auto& v = aqt_vars();
  Poly one = Poly::constant(v, 1);
  Poly pair = (one + mono(v, {2, -2, 1})) * (one + mono(v, {2, 2, 3}));
  if (knot == KnotId::k6_2) {
    // -t^-1 + (q^-2 t^-2 + t^-1 + q^2)(1 + a^2 q^-2 t)(1 + a^2 q^2 t^3)
    Poly inner = mono(v, {0, -2, -2}) + mono(v, {0, 0, -1}) + mono(v, {0, 2, 0});
    return mono(v, {0, 0, -1}, -1) + inner * pair;
  }
  // 1 + a^-2 (q^-2 t^-3 + t^-2 + q^2 t^-1)(1 + a^2 q^-2 t)(1 + a^2 q^2 t^3)
  Poly inner = mono(v, {-2, -2, -3}) + mono(v, {-2, 0, -2}) + mono(v, {-2, 2, -1});
  return one + inner * pair;
}

CyclotomicData cyclotomic_extract(const std::string& knot, const std::vector<std::pair<int, Poly>>& values) {
  std::map<int, Poly> byr;
  for (const auto& [r, p] : values) byr[r] = p.is_zero() ? Poly(tilde_vars()) : p.embed(tilde_vars());
  if (!byr.count(0) || !byr.count(1)) throw InputError("cyclotomic extraction needs data for r = 0 and r = 1");
  for (int r = 0; r < static_cast<int>(byr.size()); ++r)
    if (!byr.count(r)) throw InputError("cyclotomic extraction needs consecutive colors from 0");
  CyclotomicData out;
  out.knot = knot;
  const auto& v = tilde_vars();
  Poly one = Poly::constant(v, 1);
  if (byr[0] != one) throw NotCyclotomicError("r = 0 value is not 1");
  // Residue of P_1 modulo 1 - x with x = -a^2 Q^2 t_r^3 t_c^3: move every
  // term to a-degree 0 (a-degrees must be even).
  Poly residue(v);
  for (const auto& [e, c] : byr[1].terms()) {
    if (e[0] % 2) throw NotCyclotomicError("odd a-degree in the r = 1 value");
    int j = e[0] / 2;  // divide by x^j
    residue.add_term(Exp{0, e[1] - 2 * j, e[2] - 3 * j, e[3] - 3 * j}, j % 2 ? Rational(-c) : c);
  }
  if (!residue.is_monomial()) throw NotCyclotomicError("r = 1 value is not a monomial modulo the Pochhammer factor: " + residue.str());
  out.prefactor = residue;
  out.prefactor_note = "prefactor is fixed up to powers of -a^2 Q^2 t_r^3 t_c^3; the a-degree 0 representative is used";
  out.C.push_back(one);
  const Poly Minv = invert_monomial(out.prefactor);
  Poly b = tc_pow(2);
  for (int r = 1; r < static_cast<int>(byr.size()); ++r) {
    Poly rest = byr[r] * Minv.pow(static_cast<unsigned>(r));
    for (int k = 0; k < r; ++k)
      rest -= out.C[static_cast<std::size_t>(k)] * tc_pow(-2 * r * k) * pochhammer(pochhammer_x(r), b, k) *
              gaussian_binomial(r, k, b);
    Poly den = tc_pow(-2 * r * r) * pochhammer(pochhammer_x(r), b, r);
    Poly ck;
    if (!try_exact_div(rest, den, &ck))
      throw NotCyclotomicError("C_" + std::to_string(r) + " is not a Laurent polynomial for " + knot);
    out.C.push_back(ck);
  }
  return out;
}

Poly cyclotomic_predict(const CyclotomicData& c, int r) {
  Poly b = tc_pow(2);
  Poly sum(tilde_vars());
  for (int k = 0; k <= r && k < static_cast<int>(c.C.size()); ++k)
    sum += c.C[static_cast<std::size_t>(k)] * tc_pow(-2 * r * k) * pochhammer(pochhammer_x(r), b, k) * gaussian_binomial(r, k, b);
  return c.prefactor.pow(static_cast<unsigned>(r)) * sum;
}

PredictionReport cyclotomic_check_next(const CyclotomicData& c, int r, const Poly& value) {
  if (r != static_cast<int>(c.C.size())) throw InputError("expected data for color " + std::to_string(c.C.size()));
  PredictionReport rep;
  rep.r = r;
  Poly b = tc_pow(2);
  Poly rest = value.embed(tilde_vars()) * invert_monomial(c.prefactor).pow(static_cast<unsigned>(r));
  for (int k = 0; k < r; ++k)
    rest -= c.C[static_cast<std::size_t>(k)] * tc_pow(-2 * r * k) * pochhammer(pochhammer_x(r), b, k) * gaussian_binomial(r, k, b);
  rep.residual = rest;
  Poly den = tc_pow(-2 * r * r) * pochhammer(pochhammer_x(r), b, r);
  rep.consistent = try_exact_div(rest, den, &rep.next_C);
  if (!rep.consistent) rep.next_C = Poly(tilde_vars());
  return rep;
}

DivisibilityReport divisibility_check(const CyclotomicData& c, int N, int k) {
  if (N < 1) throw InputError("divisibility needs N >= 1");
  if (k < 0 || k >= static_cast<int>(c.C.size())) throw IndexError("C_" + std::to_string(k) + " is not available");
  DivisibilityReport rep;
  rep.N = N;
  rep.k = k;
  Poly d = decategorify_poly(c.C[static_cast<std::size_t>(k)]);
  const std::vector<std::string> qv{"q"};
  Poly at(qv);
  for (const auto& [e, coef] : d.terms()) at.add_term(Exp{e[1] + N * e[0]}, coef);
  rep.value = at;
  Poly den = pochhammer(mono(qv, {2}), mono(qv, {2}), k);
  rep.divisible = try_exact_div(at, den, &rep.quotient);
  if (!rep.divisible) rep.quotient = Poly(qv);
  return rep;
}

Poly trefoil_uncolored() { return from_terms(aqt_vars(), {{2, -2, 0}, {2, 2, 2}, {4, 0, 3}}); }

Poly trefoil_quad31() {
  return from_terms(plain_vars(), {{4, -4, 0, 0}, {4, 2, 2, 4}, {4, 4, 2, 6}, {4, 8, 4, 8}, {6, 0, 3, 5}, {6, 2, 3, 7},
                                   {6, 6, 5, 9}, {6, 8, 5, 11}, {8, 6, 6, 12}});
}

Poly trefoil_tilquad31() {
  return from_terms(tilde_vars(), {{4, -4, 0, 0}, {4, 0, 2, 4}, {4, 0, 2, 6}, {4, 4, 4, 8}, {6, -2, 3, 5}, {6, -2, 3, 7},
                                   {6, 2, 5, 9}, {6, 2, 5, 11}, {8, 0, 6, 12}});
}

}  // namespace tkh
