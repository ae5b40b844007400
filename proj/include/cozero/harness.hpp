#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cozero/finite_ring.hpp"

namespace cozero {

struct CorpusConfig {
  bool cyclic = false;
  bool products = false;
  bool galois = false;
  std::vector<RingSpec> custom;
  std::size_t max_order = 36;
  std::size_t max_cyclic_n = 36;
  /// Lets the comultiplication-ring hypothesis quantify over every ideal.
  bool include_full_ideal_quantifier = true;
  /// (R, I, J) tuple spaces only run on rings up to this order.
  std::size_t pair_order_cap = 64;
};

void validate(const CorpusConfig& config);

/// Deterministic: cyclic, then products (by order, then factor list), then
/// gf:p^k with k >= 2, then custom specs; duplicates by spec text dropped.
std::vector<RingSpec> corpus_specs(const CorpusConfig& config);
std::vector<RingPtr> generate_corpus(const CorpusConfig& config);

struct Violation {
  std::string ring;
  std::vector<std::vector<Index>> ideals;
  std::string detail;
};

struct Tally {
  std::size_t examined = 0;
  std::size_t hypothesis_hits = 0;
  std::vector<Violation> violations;
};

struct CompanionResult {
  std::string statement;
  Tally tally;
};

struct CheckResult {
  std::string id;
  std::string statement;
  Tally tally;
  bool vacuous = false;
  std::optional<CompanionResult> companion;
  /// Only filled by the vacuity audit.
  std::vector<std::string> vacuous_checks;
  std::vector<std::string> notes;

  bool passed() const {
    return tally.violations.empty() && (!companion || companion->tally.violations.empty());
  }
};

struct VerificationReport {
  CorpusConfig config;
  std::vector<std::string> corpus;
  std::vector<CheckResult> results;
  bool overall_pass = true;

  const CheckResult* find(const std::string& id) const;
};

/// "C01" ... "C30".
std::vector<std::string> all_check_ids();
/// The checks whose proper-ideal hypotheses need Ann(I) = 0.
std::vector<std::string> annihilator_free_check_ids();

VerificationReport run_checks(const std::vector<RingPtr>& corpus,
                              const std::vector<std::string>& check_ids,
                              const CorpusConfig& config = {});

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace cozero
