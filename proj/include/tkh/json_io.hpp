#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tkh/linalg.hpp"
#include "tkh/poly.hpp"
#include "tkh/ratexpr.hpp"

namespace tkh {

using Json = nlohmann::ordered_json;

// {"vars":[...],"terms":[{"exp":[...],"coef":"p/q"}]}, terms in ascending
// lexicographic order of exponents.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json rexpr_to_json(const RationalExpression& e);
Json matrix_to_json(const Matrix& m);

// Deterministic serialization: two-space indent, trailing newline.
std::string emit_json(const Json& j);

// One row per term: exponents then coefficient, aligned in columns.
std::string poly_table(const Poly& p);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tkh
