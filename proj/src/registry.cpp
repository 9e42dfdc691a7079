#include "tkh/registry.hpp"

#include <filesystem>

#include "tkh/errors.hpp"
#include "tkh/json_io.hpp"

namespace tkh {

namespace {
constexpr int kRegistryVersion = 1;
}

NormalizationRegistry NormalizationRegistry::load(const std::string& path, bool writable) {
  NormalizationRegistry reg;
  reg.path_ = path;
  reg.writable_ = writable;
  if (!std::filesystem::exists(path)) return reg;
  Json j = read_json_file(path);
  if (j.value("version", 0) != kRegistryVersion) throw InputError(path + ": unsupported registry version");
  for (const auto& [key, val] : j.at("entries").items()) reg.entries_.emplace(key, poly_from_json(val));
  return reg;
}

std::string NormalizationRegistry::default_path() { return std::string(TKH_DATA_DIR) + "/normalization.json"; }

std::optional<Poly> NormalizationRegistry::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void NormalizationRegistry::record(const std::string& key, const Poly& monomial) {
  if (!monomial.is_monomial()) throw InternalError("registry entries must be monomials");
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second != monomial)
      throw ConsistencyError("registry already holds a different monomial for " + key, it->second.str());
    return;
  }
  entries_.emplace(key, monomial);
  dirty_ = true;
}

void NormalizationRegistry::save() {
  if (!dirty_) return;
  if (!writable_ || path_.empty()) throw InternalError("registry is read-only");
  Json entries = Json::object();
  for (const auto& [k, v] : entries_) entries[k] = poly_to_json(v);
  write_json_file(path_, Json{{"version", kRegistryVersion}, {"entries", entries}});
  dirty_ = false;
}

std::optional<Poly> monomial_ratio(const Poly& target, const Poly& source) {
  if (target.is_zero() || source.is_zero() || target.size() != source.size()) return std::nullopt;
  if (target.vars() != source.vars()) throw InternalError("monomial_ratio: variable lists differ");
  const auto& [te, tc] = target.leading();
  const auto& [se, sc] = source.leading();
  Exp e(te.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = te[i] - se[i];
  Poly m = Poly::monomial(target.vars(), e, tc / sc);
  if (m * source != target) return std::nullopt;
  return m;
}

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

Reconciliation reconcile(NormalizationRegistry& reg, const std::string& key, const Poly& target, const Poly& source) {
  Reconciliation rec;
  rec.key = key;
  if (auto stored = reg.get(key)) {
    rec.monomial = stored;
    Poly residual = target - stored->embed(target.vars()) * source;
    if (residual.is_zero()) {
      rec.status = CheckStatus::pass;
    } else {
      rec.status = CheckStatus::fail;
      rec.reason = "stored monomial no longer relates the two routes";
      rec.residual = residual.str();
    }
    return rec;
  }
  auto m = monomial_ratio(target, source);
  if (!m) {
    rec.status = CheckStatus::fail;
    rec.reason = "the two routes do not differ by a monomial";
    Poly lead = Poly::monomial(target.vars(), Exp(target.nvars(), 0));
    if (!target.is_zero() && !source.is_zero()) {
      const auto& [te, tc] = target.leading();
      const auto& [se, sc] = source.leading();
      Exp e(te.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = te[i] - se[i];
      lead = Poly::monomial(target.vars(), e, tc / sc);
    }
    rec.residual = (target - lead * source).str();
    return rec;
  }
  rec.monomial = m;
  rec.status = CheckStatus::pass;
  if (reg.writable()) {
    reg.record(key, *m);
    rec.newly_recorded = true;
  } else {
    rec.reason = "monomial not in the registry";
  }
  return rec;
}

}  // namespace tkh
