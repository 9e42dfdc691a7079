#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "tkh/crosscheck.hpp"
#include "tkh/errors.hpp"
#include "tkh/homstruct.hpp"
#include "tkh/json_io.hpp"
#include "tkh/registry.hpp"

using namespace tkh;

namespace {

const std::vector<std::string> AQ{"a", "q"};

const Reconciliation* find_check(const CrossCheckReport& rep, const std::string& prefix) {
  for (const auto& c : rep.checks)
    if (c.key.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  Poly p = Poly::monomial(AQ, {2, -3}, Rational(-5, 7)) + Poly::monomial(AQ, {0, 4}, 3);
  Json j = poly_to_json(p);
  CHECK(j["vars"] == Json::array({"a", "q"}));
  CHECK(j["terms"][0]["coef"] == "3");
  CHECK(j["terms"][1]["coef"] == "-5/7");
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(Json::parse(emit_json(j))) == p);
}

TEST_CASE("malformed polynomial JSON is rejected") {
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[]})")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["a"],"terms":[{"exp":[1,2],"coef":"1"}]})")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["a"],"terms":[{"exp":[1],"coef":"x"}]})")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["a"],"terms":[{"exp":[1],"coef":"1/0"}]})")), Error);
}

TEST_CASE("emitted JSON is deterministic") {
  Json j = poly_to_json(trefoil_tilquad31());
  std::string s = emit_json(j);
  CHECK(s == emit_json(poly_to_json(trefoil_tilquad31())));
  CHECK(s.back() == '\n');
  CHECK(s.find("\"vars\"") < s.find("\"terms\""));
}

TEST_CASE("polynomial table") {
  std::string t = poly_table(trefoil_uncolored());
  std::istringstream in(t);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("monomial ratios") {
  Poly s = Poly::monomial(AQ, {0, 1}) + Poly::monomial(AQ, {2, 3});
  Poly m = Poly::monomial(AQ, {1, -2}, -1);
  auto r = monomial_ratio(m * s, s);
  REQUIRE(r.has_value());
  CHECK(*r == m);
  CHECK_FALSE(monomial_ratio(s + Poly::constant(AQ, 1), s).has_value());
}

TEST_CASE("registry entries are write-once") {
  auto path = std::filesystem::temp_directory_path() / "tkh_registry_test.json";
  std::filesystem::remove(path);
  {
    auto reg = NormalizationRegistry::load(path.string(), true);
    CHECK(reg.entries().empty());
    reg.record("x~y/T(2,3)", Poly::monomial(AQ, {2, -6}));
    reg.record("x~y/T(2,3)", Poly::monomial(AQ, {2, -6}));
    CHECK_THROWS_AS(reg.record("x~y/T(2,3)", Poly::monomial(AQ, {2, -4})), ConsistencyError);
    reg.save();
  }
  auto reg = NormalizationRegistry::load(path.string(), false);
  REQUIRE(reg.get("x~y/T(2,3)").has_value());
  CHECK(*reg.get("x~y/T(2,3)") == Poly::monomial(AQ, {2, -6}));

  Poly src = Poly::monomial(AQ, {0, 1}) + Poly::monomial(AQ, {2, 1});
  auto ok = reconcile(reg, "x~y/T(2,3)", Poly::monomial(AQ, {2, -6}) * src, src);
  CHECK(ok.status == CheckStatus::pass);
  auto bad = reconcile(reg, "x~y/T(2,3)", src, src);
  CHECK(bad.status == CheckStatus::fail);
  CHECK_FALSE(bad.residual.empty());
  auto unknown = reconcile(reg, "x~y/T(3,4)", src, src);
  CHECK(unknown.status == CheckStatus::pass);
  CHECK(unknown.reason == "monomial not in the registry");
  CHECK_FALSE(unknown.newly_recorded);
  std::filesystem::remove(path);
}

TEST_CASE("crosscheck of T(3,4) against the stored registry") {
  auto reg = NormalizationRegistry::load(NormalizationRegistry::default_path(), false);
  CrossCheckReport rep = crosscheck(TorusKnot(3, 4), 1, 0, reg);
  CHECK(rep.ok());
  const auto* ch = find_check(rep, "cherednik~hilbert");
  REQUIRE(ch != nullptr);
  CHECK(ch->status == CheckStatus::skipped);
  for (const char* k : {"daha~koszul", "koszul~hilbert", "daha~hilbert"}) {
    const auto* c = find_check(rep, k);
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::pass);
  }
}

TEST_CASE("crosscheck of the (2)-colored trefoil") {
  auto reg = NormalizationRegistry::load(NormalizationRegistry::default_path(), false);
  CrossCheckReport rep = crosscheck(TorusKnot(2, 3), 2, 0, reg);
  CHECK(rep.ok());
  CHECK(knot_key(TorusKnot(2, 3), 2) == "T(2,3),r=2");
  for (const auto& r : rep.routes)
    if (r.route == "daha") CHECK_FALSE(r.ran);
  const auto* printed = find_check(rep, "koszul~printed");
  REQUIRE(printed != nullptr);
  CHECK(printed->status == CheckStatus::pass);
  REQUIRE(printed->monomial.has_value());
  CHECK(*printed->monomial == Poly::monomial(plain_vars(), {4, -4, 0, 0}));
  Json j = report_to_json(rep);
  CHECK(j.contains("checks"));
}

TEST_CASE("routes agree for T(4,5), where the relations are not t_c-homogeneous") {
  auto reg = NormalizationRegistry::load(NormalizationRegistry::default_path(), false);
  CrossCheckReport rep = crosscheck(TorusKnot(4, 5), 1, 0, reg);
  CHECK(rep.ok());
  for (const char* k : {"daha~koszul", "koszul~hilbert", "daha~hilbert"}) {
    const auto* c = find_check(rep, k);
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::pass);
    CHECK(c->reason.empty());
  }
}
