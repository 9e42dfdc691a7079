#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkh/daha.hpp"
#include "tkh/json_io.hpp"
#include "tkh/registry.hpp"

namespace tkh {

struct RouteOutput {
  std::string route;  // daha, koszul, hilbert, cherednik
  bool ran = false;
  std::string reason;  // why it did not run
  std::optional<Poly> value;
};

struct CrossCheckReport {
  TorusKnot knot;
  int r = 1;
  int q_order = 0;
  std::vector<RouteOutput> routes;
  std::vector<Reconciliation> checks;
  bool ok() const;
};

std::string knot_key(const TorusKnot& k, int r);

// Koszul data of an uncolored model (t_r, t_c exponents equal) as (a, q, tc).
Poly koszul_to_homological(const Poly& p);
// Plain quadruple data at t_r = -1, t_c = 1.
Poly koszul_decategorified(const Poly& p);

CrossCheckReport crosscheck(const TorusKnot& k, int r, int q_order, NormalizationRegistry& reg);

Json report_to_json(const CrossCheckReport& rep);

}  // namespace tkh
