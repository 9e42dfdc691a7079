#pragma once

#include <map>
#include <optional>
#include <string>

#include "tkh/poly.hpp"

namespace tkh {

/**
 * Overall monomials relating the grading conventions of two routes, keyed by
 * "<route>~<route>/<knot>". Entries are write-once: a key that already holds a
 * monomial is never overwritten, and a reconciliation that needs a different
 * monomial fails.
 */
class NormalizationRegistry {
 public:
  NormalizationRegistry() = default;
  // A missing file gives an empty registry.
  static NormalizationRegistry load(const std::string& path, bool writable);
  static std::string default_path();

  std::optional<Poly> get(const std::string& key) const;
  // Throws ConsistencyError if the key holds a different monomial.
  void record(const std::string& key, const Poly& monomial);
  bool writable() const { return writable_; }
  bool dirty() const { return dirty_; }
  void save();
  const std::map<std::string, Poly>& entries() const { return entries_; }

 private:
  std::string path_;
  bool writable_ = false;
  bool dirty_ = false;
  std::map<std::string, Poly> entries_;
};

// m with target = m * source when it exists.
std::optional<Poly> monomial_ratio(const Poly& target, const Poly& source);

enum class CheckStatus { pass, fail, skipped };
std::string status_str(CheckStatus s);

struct Reconciliation {
  std::string key;
  CheckStatus status = CheckStatus::skipped;
  std::string reason;
  std::optional<Poly> monomial;
  std::string residual;  // target - monomial * source on failure
  bool newly_recorded = false;
};

// Compares target against source up to the registry monomial for `key`. An
// unregistered key is recorded when the registry is writable.
Reconciliation reconcile(NormalizationRegistry& reg, const std::string& key, const Poly& target, const Poly& source);

}  // namespace tkh
