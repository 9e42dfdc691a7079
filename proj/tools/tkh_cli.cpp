#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "tkh/cherednik.hpp"
#include "tkh/crosscheck.hpp"
#include "tkh/daha.hpp"
#include "tkh/errors.hpp"
#include "tkh/hilbert.hpp"
#include "tkh/homstruct.hpp"
#include "tkh/json_io.hpp"
#include "tkh/koszul.hpp"
#include "tkh/macdonald.hpp"
#include "tkh/registry.hpp"

using namespace tkh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct Output {
  std::string json_path;
  bool table = false;
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--json", out.json_path, "write JSON to this file instead of stdout");
}

void emit(const Output& out, const Json& j) {
  if (out.json_path.empty()) std::cout << emit_json(j);
  else write_json_file(out.json_path, j);
}

Json grading_json(const Grading& g) { return Json::array({g.a, g.q, g.tr, g.tc}); }

// Reads quadruply graded data. Variables (a,Q,tr,tc) mean tilde gradings,
// (a,q,tr,tc) plain ones, and (a,q,t) uncolored data. "color": [r, rho]
// defaults to [1, 1].
QuadGradedSpace read_space(const std::string& path) {
  Json j = read_json_file(path);
  Poly p = poly_from_json(j);
  if (p.vars() == std::vector<std::string>{"a", "q", "t"}) return QuadGradedSpace::uncolored(p);
  int r = 1, rho = 1;
  if (j.contains("color")) {
    auto c = j.at("color").get<std::vector<int>>();
    if (c.size() != 2) throw InputError("\"color\" must be [r, rho]");
    r = c[0];
    rho = c[1];
  }
  if (p.vars() == tilde_vars()) return QuadGradedSpace::from_poincare(p, r, rho, true);
  if (p.vars() == plain_vars()) return QuadGradedSpace::from_poincare(p, r, rho, false);
  throw InputError(path + ": expected variables (a,Q,tr,tc), (a,q,tr,tc) or (a,q,t)");
}

Json verify_json(const VerifyReport& rep) {
  Json j{{"property", rep.property}, {"pass", rep.pass}, {"offending", rep.offending}};
  if (rep.delta) j["delta"] = to_string(*rep.delta);
  return j;
}

int run_superpoly(int m, int n, const std::string& vars, const std::vector<std::string>& point, bool reduced,
                  const Output& out) {
  TorusKnot k(m, n);
  if (!point.empty()) {
    if (point.size() != 3) throw InputError("--point takes A Q T");
    Rational v = daha_at_point(k, parse_rational(point[0]), parse_rational(point[1]), parse_rational(point[2]));
    emit(out, Json{{"knot", {m, n}}, {"point", point}, {"value", to_string(v)}});
    return kExitOk;
  }
  SuperPolynomial sp = daha_superpoly(k);
  Poly value = reduced ? daha_reduced(k) : sp.value;
  if (vars == "homological") value = specialize_homological(value);
  Json j{{"knot", {m, n}}, {"reduced", reduced}, {"vars", vars}, {"value", poly_to_json(value)}};
  if (!reduced) j["normalization"] = sp.normalization;
  emit(out, j);
  return kExitOk;
}

int run_koszul(int m, int n, int r, bool unreduced, const std::string& diff, int q_cutoff, bool table,
               const Output& out) {
  TorusKnot k(m, n);
  auto rel = moduli_relations(k, r, !unreduced);
  auto model = QuotientModel::build(rel, q_cutoff);
  if (table) {
    for (const auto& b : model.basis())
      std::cout << model.ring().str(b.mono) << "\t" << b.deg.a << "\t" << b.deg.q << "\t" << b.deg.tr << "\t"
                << b.deg.tc << "\n";
    return kExitOk;
  }
  Json gens = Json::array();
  for (const auto& b : model.basis()) gens.push_back(Json{{"element", model.ring().str(b.mono)}, {"grading", grading_json(b.deg)}});
  Json j{{"knot", {m, n}},
         {"color", r},
         {"reduced", !unreduced},
         {"dimension", model.basis().size()},
         {"truncated", model.truncated()},
         {"poincare", poly_to_json(model.poincare())},
         {"generators", gens}};
  int code = kExitOk;
  if (!diff.empty()) {
    Differential d = parse_differential(diff, r);
    HomologyReport h = apply_differential(model, d, rel);
    Json bide = Json::array();
    for (const auto& [aq, dim] : h.by_bidegree) bide.push_back(Json{{"a", aq.first}, {"q", aq.second}, {"dim", dim}});
    j["differential"] = Json{{"name", d.str()},
                             {"rank", h.rank},
                             {"homology", h.homology},
                             {"d_squared_zero", h.d_squared_zero},
                             {"ideal_preserved", h.ideal_preserved},
                             {"by_bidegree", bide}};
    if (!h.d_squared_zero) code = kExitMismatch;
  }
  emit(out, j);
  return code;
}

int run_macdonald(const std::string& lambda, bool norm, const std::vector<std::string>& eval,
                  const std::vector<int>& st, const Output& out) {
  Json j;
  if (!st.empty()) {
    if (st.size() != 2) throw InputError("--st takes N CUTOFF");
    RefinedST s = refined_ST(st[0], st[1]);
    Json index = Json::array(), S = Json::array(), T = Json::array();
    for (const auto& p : s.index) index.push_back(p.str());
    for (const auto& row : s.S) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(rexpr_to_json(e));
      S.push_back(r);
    }
    for (const auto& row : s.T) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(rexpr_to_json(e));
      T.push_back(r);
    }
    j["st"] = Json{{"N", st[0]}, {"index", index}, {"S_relative_to_S00", S}, {"T", T}};
  }
  if (!lambda.empty()) {
    Partition lam = parse_partition(lambda);
    SymFunc f = macdonald_poly(lam);
    Json coords = Json::array();
    for (const auto& [p, c] : f.coords) coords.push_back(Json{{"m", p.str()}, {"coef", rexpr_to_json(c)}});
    j["lambda"] = lam.str();
    j["monomial_coordinates"] = coords;
    if (norm) j["norm"] = rexpr_to_json(macdonald_norm(lam));
    if (!eval.empty()) {
      if (eval.size() != 2) throw InputError("--eval takes N MU");
      int N = std::stoi(eval[0]);
      Partition mu = parse_partition(eval[1]);
      j["eval"] = Json{{"N", N}, {"mu", mu.str()}, {"value", rexpr_to_json(principal_eval(lam, N, mu))}};
    }
  } else if (st.empty()) {
    throw InputError("give --lambda or --st");
  }
  emit(out, j);
  return kExitOk;
}

int run_cherednik(int m, int n, int dmax, bool filtration, int quasis_order, const Output& out) {
  Json j{{"m", m}, {"n", n}};
  if (dmax < 0) dmax = (m - 1) * (n - 1) + 1;
  GradedCharacter ch = irreducible_character(m, n, dmax);
  Json degs = Json::array();
  for (const auto& d : ch.degrees)
    degs.push_back(Json{{"degree", d.degree}, {"q_degree", d.q_degree}, {"dimension", d.dimension}, {"hook_mult", d.mult}, {"other", d.other}});
  j["character"] = Json{{"total", ch.total}, {"degrees", degs}};
  if (filtration) {
    Json rows = Json::array();
    for (const auto& e : filtration_grading(m, n)) {
      Json r{{"element", e.element}, {"degree", e.degree}, {"lower_index", e.lower_index}, {"upper_index", e.upper_index}};
      if (e.isotype) r["isotype"] = *e.isotype;
      if (e.stated_index) r["stated_index"] = to_string(*e.stated_index);
      rows.push_back(r);
    }
    j["filtration"] = rows;
  }
  if (quasis_order > 0) {
    QuasisReport q = check_quasis(m, n, quasis_order);
    j["quasis"] = Json{{"q_order", q.q_order},
                       {"lhs", poly_to_json(q.lhs)},
                       {"rhs", poly_to_json(q.rhs)},
                       {"monomial", poly_to_json(q.monomial)},
                       {"matches", q.matches}};
  }
  emit(out, j);
  return kExitOk;
}

int run_hilb(int m, int n, int max_q, bool table, const Output& out) {
  TorusKnot k(m, n);
  Semigroup S = semigroup(m, n);
  if (max_q <= 0) max_q = default_q_order(k);
  int max_l = (max_q + S.milnor) / 2;
  HilbTable t = hilb_table(S, max_l);
  if (table) {
    std::cout << "l\tjump\tcount\n";
    for (const auto& [key, c] : t) std::cout << key.first << "\t" << key.second << "\t" << c.get_str() << "\n";
    return kExitOk;
  }
  Json rows = Json::array();
  for (const auto& [key, c] : t) rows.push_back(Json{{"l", key.first}, {"jump", key.second}, {"count", c.get_str()}});
  Json j{{"knot", {m, n}}, {"gaps", S.gaps}, {"max_q", max_q}, {"table", rows}, {"series", poly_to_json(os_homfly(k, max_q))}};
  try {
    j["reduced"] = poly_to_json(os_reduced(k, max_q));
  } catch (const CutoffError& e) {
    j["reduced_unavailable"] = e.what();
  }
  emit(out, j);
  return kExitOk;
}

int run_verify(const std::string& property, const std::string& input, const std::string& against, const Output& out) {
  QuadGradedSpace s = read_space(input);
  VerifyReport rep;
  if (property == "self-symmetry") {
    rep = verify_self_symmetry(regrade(s, RegradeDirection::to_tilde));
  } else if (property == "thin") {
    rep = verify_thin(s);
  } else if (property == "mirror" || property == "growth") {
    if (against.empty()) throw InputError(property + " needs --against");
    QuadGradedSpace o = read_space(against);
    auto st = regrade(s, RegradeDirection::to_tilde), ot = regrade(o, RegradeDirection::to_tilde);
    rep = property == "mirror" ? verify_mirror(st, ot) : verify_growth(st, ot);
  } else {
    throw InputError("unknown property '" + property + "'");
  }
  emit(out, verify_json(rep));
  return rep.pass ? kExitOk : kExitMismatch;
}

int run_cyclotomic(const std::string& knot, int color, bool extract, int upto, const Output& out) {
  KnotId id = parse_knot_id(knot);
  Json j{{"knot", knot_id_str(id)}};
  if (!extract) {
    QuadGradedSpace s = colored_superpoly_62_63(id, color);
    j["color"] = color;
    j["dimension"] = s.dimension();
    j["poincare"] = poly_to_json(s.poincare());
    emit(out, j);
    return kExitOk;
  }
  if (upto < 1) upto = color;
  std::vector<std::pair<int, Poly>> values;
  for (int r = 0; r <= upto; ++r) values.emplace_back(r, colored_superpoly_62_63_poly(id, r));
  CyclotomicData c = cyclotomic_extract(knot_id_str(id), values);
  Json C = Json::array();
  for (const auto& ck : c.C) C.push_back(poly_to_json(ck));
  Json div = Json::array();
  bool all = true;
  for (int N = 1; N <= 3; ++N)
    for (int k = 1; k < static_cast<int>(c.C.size()); ++k) {
      DivisibilityReport d = divisibility_check(c, N, k);
      all = all && d.divisible;
      div.push_back(Json{{"N", N}, {"k", k}, {"divisible", d.divisible}});
    }
  PredictionReport next = cyclotomic_check_next(c, upto + 1, colored_superpoly_62_63_poly(id, upto + 1));
  j["prefactor"] = poly_to_json(c.prefactor);
  j["prefactor_note"] = c.prefactor_note;
  j["C"] = C;
  j["divisibility"] = div;
  j["next_color"] = Json{{"r", upto + 1}, {"consistent", next.consistent}};
  emit(out, j);
  return all && next.consistent ? kExitOk : kExitMismatch;
}

int run_crosscheck(int m, int n, int r, int q_order, bool record, const std::string& registry_path, const Output& out) {
  std::string path = registry_path.empty() ? NormalizationRegistry::default_path() : registry_path;
  NormalizationRegistry reg = NormalizationRegistry::load(path, record);
  CrossCheckReport rep = crosscheck(TorusKnot(m, n), r, q_order, reg);
  if (record) reg.save();
  emit(out, report_to_json(rep));
  return rep.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus knot superpolynomials and colored homology checks"};
  app.require_subcommand(1);
  Output out;

  std::vector<int> torus;
  auto torus_opt = [&](CLI::App* c) { return c->add_option("--torus", torus, "torus knot M N")->expected(2)->required(); };

  auto* sp = app.add_subcommand("superpoly", "DAHA superpolynomial of a torus knot");
  torus_opt(sp);
  std::string sp_vars = "daha";
  std::vector<std::string> sp_point;
  bool sp_reduced = false;
  sp->add_option("--vars", sp_vars)->check(CLI::IsMember({"daha", "homological"}));
  sp->add_option("--point", sp_point, "evaluate at A Q T")->expected(3);
  sp->add_flag("--reduced", sp_reduced, "divide by the unknot");
  add_output_flags(sp, out);

  auto* ko = app.add_subcommand("koszul", "Koszul model of colored homology");
  torus_opt(ko);
  int ko_color = 1, ko_cutoff = -1;
  bool ko_unreduced = false, ko_table = false;
  std::string ko_diff;
  ko->add_option("--color", ko_color)->required()->check(CLI::PositiveNumber);
  ko->add_flag("--unreduced", ko_unreduced);
  ko->add_option("--diff", ko_diff, "dN:K, colored+:K or colored-:K");
  ko->add_option("--q-cutoff", ko_cutoff, "truncate the unreduced model at this q-degree");
  ko->add_flag("--table", ko_table, "print the generator table");
  add_output_flags(ko, out);

  auto* ma = app.add_subcommand("macdonald", "Macdonald polynomials and refined S/T");
  std::string ma_lambda;
  bool ma_norm = false;
  std::vector<std::string> ma_eval;
  std::vector<int> ma_st;
  ma->add_option("--lambda", ma_lambda, "partition such as 2,1");
  ma->add_flag("--norm", ma_norm);
  ma->add_option("--eval", ma_eval, "principal evaluation: N MU")->expected(2);
  ma->add_option("--st", ma_st, "refined S and T: N CUTOFF")->expected(2);
  add_output_flags(ma, out);

  auto* ch = app.add_subcommand("cherednik", "finite-dimensional rational Cherednik modules");
  int ch_m = 0, ch_n = 0, ch_dmax = -1, ch_quasis = 0;
  bool ch_filt = false;
  ch->add_option("--m", ch_m)->required();
  ch->add_option("--n", ch_n)->required();
  ch->add_option("--dmax", ch_dmax);
  ch->add_flag("--filtration", ch_filt);
  ch->add_option("--check-quasis", ch_quasis, "q-order for the trace comparison");
  add_output_flags(ch, out);

  auto* hi = app.add_subcommand("hilb", "semigroup ideal counts and the HOMFLY series");
  torus_opt(hi);
  int hi_q = 0;
  bool hi_table = false;
  hi->add_option("--max-q", hi_q);
  hi->add_flag("--table", hi_table);
  add_output_flags(hi, out);

  auto* ve = app.add_subcommand("verify", "structural properties of quadruply graded data");
  std::string ve_prop, ve_in, ve_against;
  ve->add_option("--property", ve_prop)->required()->check(CLI::IsMember({"self-symmetry", "mirror", "growth", "thin"}));
  ve->add_option("--input", ve_in)->required();
  ve->add_option("--against", ve_against);
  add_output_flags(ve, out);

  auto* cy = app.add_subcommand("cyclotomic", "colored superpolynomials of 6_2 and 6_3");
  std::string cy_knot;
  int cy_color = 1, cy_upto = 0;
  bool cy_extract = false;
  cy->add_option("--knot", cy_knot)->required();
  cy->add_option("--color", cy_color)->check(CLI::NonNegativeNumber);
  cy->add_flag("--extract", cy_extract);
  cy->add_option("--upto", cy_upto);
  add_output_flags(cy, out);

  auto* cc = app.add_subcommand("crosscheck", "run every route on one torus knot and reconcile");
  torus_opt(cc);
  int cc_color = 1, cc_q = 0;
  bool cc_record = false;
  std::string cc_registry;
  cc->add_option("--color", cc_color)->check(CLI::PositiveNumber);
  cc->add_option("--q-order", cc_q);
  cc->add_flag("--record", cc_record, "write new monomials to the registry");
  cc->add_option("--registry", cc_registry);
  add_output_flags(cc, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sp) return run_superpoly(torus[0], torus[1], sp_vars, sp_point, sp_reduced, out);
    if (*ko) return run_koszul(torus[0], torus[1], ko_color, ko_unreduced, ko_diff, ko_cutoff, ko_table, out);
    if (*ma) return run_macdonald(ma_lambda, ma_norm, ma_eval, ma_st, out);
    if (*ch) return run_cherednik(ch_m, ch_n, ch_dmax, ch_filt, ch_quasis, out);
    if (*hi) return run_hilb(torus[0], torus[1], hi_q, hi_table, out);
    if (*ve) return run_verify(ve_prop, ve_in, ve_against, out);
    if (*cy) return run_cyclotomic(cy_knot, cy_color, cy_extract, cy_upto, out);
    if (*cc) return run_crosscheck(torus[0], torus[1], cc_color, cc_q, cc_record, cc_registry, out);
  } catch (const MathError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    if (const auto* c = dynamic_cast<const ConsistencyError*>(&e)) std::cerr << "residual: " << c->residual() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
