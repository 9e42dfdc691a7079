#pragma once

#include <string>
#include <vector>

#include "tkh/poly.hpp"

namespace tkh {

// Power series sum_k coeffs[k] z^k, truncated after `order`. Coefficients live
// in a polynomial ring of auxiliary variables. Terms past `order` are unknown,
// not zero.
struct TruncatedSeries {
  std::string variable = "z";
  int order = 0;
  std::vector<std::string> coeff_vars;
  std::vector<Poly> coeffs;  // size order + 1

  static TruncatedSeries from_coeffs(std::vector<std::string> coeff_vars, std::vector<Poly> coeffs, int order,
                                     std::string variable = "z");
  const Poly& operator[](int k) const { return coeffs.at(static_cast<std::size_t>(k)); }
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// (f)^alpha for f with constant term 1, via the J.C.P. Miller recurrence.
TruncatedSeries series_pow(const TruncatedSeries& f, const Rational& alpha, int order);
// log(f) for f with constant term 1.
TruncatedSeries series_log(const TruncatedSeries& f, int order);

}  // namespace tkh
