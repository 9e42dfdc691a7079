#include "tkh/crosscheck.hpp"

#include "tkh/cherednik.hpp"
#include "tkh/errors.hpp"
#include "tkh/hilbert.hpp"
#include "tkh/homstruct.hpp"
#include "tkh/koszul.hpp"

namespace tkh {

namespace {

RouteOutput skipped(const std::string& route, const std::string& reason) {
  RouteOutput o;
  o.route = route;
  o.reason = reason;
  return o;
}

Reconciliation skip_check(const std::string& key, const std::string& reason) {
  Reconciliation r;
  r.key = key;
  r.reason = reason;
  return r;
}

const RouteOutput* find_route(const std::vector<RouteOutput>& routes, const std::string& name) {
  for (const auto& r : routes)
    if (r.route == name && r.ran) return &r;
  return nullptr;
}

std::string missing_reason(const std::vector<RouteOutput>& routes, const std::string& a, const std::string& b) {
  for (const auto& r : routes)
    if ((r.route == a || r.route == b) && !r.ran) return r.route + " route did not run: " + r.reason;
  return "route unavailable";
}

}  // namespace

bool CrossCheckReport::ok() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

std::string knot_key(const TorusKnot& k, int r) {
  std::string s = "T(" + std::to_string(k.m) + "," + std::to_string(k.n) + ")";
  if (r != 1) s += ",r=" + std::to_string(r);
  return s;
}

Poly koszul_to_homological(const Poly& p) {
  Poly out(homological_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[2] != e[3]) throw GradingError("t_r and t_c gradings differ; not uncolored data");
    out.add_term(Exp{e[0], e[1], e[3]}, c);
  }
  return out;
}

Poly koszul_decategorified(const Poly& p) {
  Poly out(std::vector<std::string>{"a", "q"});
  for (const auto& [e, c] : p.terms()) out.add_term(Exp{e[0], e[1]}, e[2] % 2 ? Rational(-c) : c);
  return out;
}

CrossCheckReport crosscheck(const TorusKnot& k, int r, int q_order, NormalizationRegistry& reg) {
  if (r < 1) throw InputError("color must be positive");
  CrossCheckReport rep;
  rep.knot = k;
  rep.r = r;
  rep.q_order = q_order > 0 ? q_order : default_q_order(k);
  const std::string tag = knot_key(k, r);

  if (r != 1) {
    rep.routes.push_back(skipped("daha", "only the fundamental color is in DAHA scope"));
  } else {
    try {
      // The sum is symmetric in (m, n); sum over the smaller tableau size.
      bool swap = k.n > kDahaSymbolicLimit && k.m < k.n;
      TorusKnot kk = swap ? TorusKnot(k.n, k.m) : k;
      RouteOutput o{"daha", true, swap ? "computed as " + kk.str() : "", specialize_homological(daha_reduced(kk))};
      rep.routes.push_back(o);
    } catch (const ScaleError& e) {
      rep.routes.push_back(skipped("daha", e.what()));
    }
  }

  try {
    auto rel = moduli_relations(k, r, true);
    auto model = QuotientModel::build(rel);
    rep.routes.push_back(RouteOutput{"koszul", true, "", model.poincare()});
  } catch (const FinitenessError& e) {
    rep.routes.push_back(skipped("koszul", e.what()));
  }

  if (r != 1) {
    rep.routes.push_back(skipped("hilbert", "the Hilbert scheme route is uncolored"));
  } else {
    try {
      rep.routes.push_back(RouteOutput{"hilbert", true, "", os_reduced(k, rep.q_order)});
    } catch (const CutoffError& e) {
      rep.routes.push_back(skipped("hilbert", e.what()));
    }
  }

  std::optional<QuasisReport> quasis;
  if (r != 1) {
    rep.routes.push_back(skipped("cherednik", "only the fundamental color has a Cherednik model"));
  } else if (k.n < 2 || k.n > 3) {
    rep.routes.push_back(skipped("cherednik", "n=" + std::to_string(k.n) + " outside the supported range 2..3"));
  } else {
    try {
      quasis = check_quasis(k.m, k.n, rep.q_order);
      rep.routes.push_back(RouteOutput{"cherednik", true, "", quasis->lhs});
    } catch (const ConsistencyError& e) {
      RouteOutput o{"cherednik", true, e.what(), std::nullopt};
      rep.routes.push_back(o);
      Reconciliation fail;
      fail.key = "cherednik~hilbert/" + tag;
      fail.status = CheckStatus::fail;
      fail.reason = e.what();
      fail.residual = e.residual();
      rep.checks.push_back(fail);
    } catch (const Error& e) {
      rep.routes.push_back(skipped("cherednik", e.what()));
    }
  }

  const auto* daha = find_route(rep.routes, "daha");
  const auto* kos = find_route(rep.routes, "koszul");
  const auto* hilb = find_route(rep.routes, "hilbert");

  const std::string dk = "daha~koszul/" + tag;
  if (daha && kos) rep.checks.push_back(reconcile(reg, dk, *daha->value, koszul_to_homological(*kos->value)));
  else rep.checks.push_back(skip_check(dk, missing_reason(rep.routes, "daha", "koszul")));

  const std::string kh = "koszul~hilbert/" + tag;
  if (kos && hilb) rep.checks.push_back(reconcile(reg, kh, *hilb->value, koszul_decategorified(*kos->value)));
  else rep.checks.push_back(skip_check(kh, missing_reason(rep.routes, "koszul", "hilbert")));

  const std::string dh = "daha~hilbert/" + tag;
  if (daha && hilb) rep.checks.push_back(reconcile(reg, dh, *hilb->value, daha->value->specialize(2, -1).embed({"a", "q"})));
  else rep.checks.push_back(skip_check(dh, missing_reason(rep.routes, "daha", "hilbert")));

  const std::string ch = "cherednik~hilbert/" + tag;
  if (quasis) {
    // check_quasis already matched the two sides; the registry pins its monomial.
    Reconciliation rec;
    rec.key = ch;
    rec.monomial = quasis->monomial;
    auto stored = reg.get(ch);
    if (stored && *stored != quasis->monomial) {
      rec.status = CheckStatus::fail;
      rec.reason = "stored monomial no longer relates the two routes";
      rec.residual = (quasis->rhs - *stored * quasis->lhs).str();
    } else {
      rec.status = CheckStatus::pass;
      if (!stored && reg.writable()) {
        reg.record(ch, quasis->monomial);
        rec.newly_recorded = true;
      } else if (!stored) {
        rec.reason = "monomial not in the registry";
      }
    }
    rep.checks.push_back(rec);
  } else if (!find_route(rep.routes, "cherednik")) {
    rep.checks.push_back(skip_check(ch, missing_reason(rep.routes, "cherednik", "hilbert")));
  }

  if (k.m * k.n == 6 && std::min(k.m, k.n) == 2 && r == 2) {
    const std::string gk = "koszul~printed/" + tag;
    if (kos) rep.checks.push_back(reconcile(reg, gk, trefoil_quad31(), *kos->value));
    else rep.checks.push_back(skip_check(gk, missing_reason(rep.routes, "koszul", "koszul")));
  }
  return rep;
}

Json report_to_json(const CrossCheckReport& rep) {
  Json routes = Json::array();
  for (const auto& r : rep.routes) {
    Json o{{"route", r.route}, {"ran", r.ran}};
    if (!r.reason.empty()) o["reason"] = r.reason;
    if (r.value) o["value"] = poly_to_json(*r.value);
    routes.push_back(o);
  }
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json o{{"key", c.key}, {"status", status_str(c.status)}};
    if (!c.reason.empty()) o["reason"] = c.reason;
    if (c.monomial) o["monomial"] = poly_to_json(*c.monomial);
    if (!c.residual.empty()) o["residual"] = c.residual;
    if (c.newly_recorded) o["newly_recorded"] = true;
    checks.push_back(o);
  }
  return Json{{"knot", {rep.knot.m, rep.knot.n}},
              {"color", rep.r},
              {"q_order", rep.q_order},
              {"routes", routes},
              {"checks", checks},
              {"ok", rep.ok()}};
}

}  // namespace tkh
