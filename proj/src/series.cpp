#include "tkh/series.hpp"

#include <algorithm>

#include "tkh/errors.hpp"

namespace tkh {

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<std::string> coeff_vars, std::vector<Poly> coeffs, int order,
                                             std::string variable) {
  TruncatedSeries s;
  s.variable = std::move(variable);
  s.order = order;
  s.coeff_vars = coeff_vars;
  s.coeffs.assign(static_cast<std::size_t>(order) + 1, Poly(coeff_vars));
  for (std::size_t k = 0; k < coeffs.size() && k <= static_cast<std::size_t>(order); ++k)
    s.coeffs[k] = coeffs[k].is_zero() ? Poly(coeff_vars) : coeffs[k];
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int order = std::min(a.order, b.order);
  TruncatedSeries out = TruncatedSeries::from_coeffs(a.coeff_vars, {}, order, a.variable);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      out.coeffs[i + j] += a[i] * b[j];
    }
  return out;
}

namespace {

void require_unit_constant(const TruncatedSeries& f) {
  if (f.coeffs.empty() || !(f.coeffs[0].is_constant() && f.coeffs[0].constant_term() == 1))
    throw SeriesBaseError("series base must have constant term 1");
}

}  // namespace

TruncatedSeries series_pow(const TruncatedSeries& f, const Rational& alpha, int order) {
  require_unit_constant(f);
  if (order < 0) throw InputError("negative series order");
  if (order > f.order) throw InputError("requested order exceeds the known order of the base");
  TruncatedSeries h = TruncatedSeries::from_coeffs(f.coeff_vars, {}, order, f.variable);
  h.coeffs[0] = Poly::constant(f.coeff_vars, 1);
  // n h_n = sum_{k=1}^n ((alpha + 1) k - n) f_k h_{n-k}
  for (int n = 1; n <= order; ++n) {
    Poly acc(f.coeff_vars);
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero() || h[n - k].is_zero()) continue;
      Rational w = (alpha + 1) * k - n;
      if (w == 0) continue;
      acc += (f[k] * h[n - k]) * w;
    }
    h.coeffs[n] = acc * (Rational(1) / n);
  }
  return h;
}

TruncatedSeries series_log(const TruncatedSeries& f, int order) {
  require_unit_constant(f);
  if (order > f.order) throw InputError("requested order exceeds the known order of the base");
  // g = log f satisfies f g' = f', i.e. n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
  TruncatedSeries g = TruncatedSeries::from_coeffs(f.coeff_vars, {}, order, f.variable);
  for (int n = 1; n <= order; ++n) {
    Poly acc = f[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (g[k].is_zero() || f[n - k].is_zero()) continue;
      acc -= (g[k] * f[n - k]) * Rational(k);
    }
    g.coeffs[n] = acc * (Rational(1) / n);
  }
  return g;
}

}  // namespace tkh
