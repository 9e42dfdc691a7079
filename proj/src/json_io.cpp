#include "tkh/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", to_string(c)}});
  return Json{{"vars", p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw InputError("polynomial JSON needs \"vars\" and \"terms\"");
  std::vector<std::string> vars;
  try {
    vars = j.at("vars").get<std::vector<std::string>>();
  } catch (const Json::exception&) {
    throw InputError("\"vars\" must be a list of strings");
  }
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) throw InputError("repeated variable name");
  Poly p(vars);
  if (!j.at("terms").is_array()) throw InputError("\"terms\" must be a list");
  for (const auto& t : j.at("terms")) {
    Exp e;
    std::string coef;
    try {
      e = t.at("exp").get<Exp>();
      const auto& c = t.at("coef");
      coef = c.is_string() ? c.get<std::string>() : c.dump();
    } catch (const Json::exception&) {
      throw InputError("term needs an integer \"exp\" list and a \"coef\"");
    }
    if (e.size() != vars.size()) throw InputError("exponent length does not match the variable list");
    p.add_term(e, parse_rational(coef));
  }
  return p;
}

Json rexpr_to_json(const RationalExpression& e) {
  return Json{{"numerator", poly_to_json(e.numerator())}, {"denominator", poly_to_json(e.denominator())}};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

std::string poly_table(const Poly& p) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = p.vars();
  head.push_back("coef");
  rows.push_back(head);
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::string> row;
    for (int x : e) row.push_back(std::to_string(x));
    row.push_back(to_string(c));
    rows.push_back(row);
  }
  std::vector<std::size_t> w(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << std::string(w[i] - row[i].size(), ' ') << row[i];
    }
    os << "\n";
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << emit_json(j);
}

}  // namespace tkh
