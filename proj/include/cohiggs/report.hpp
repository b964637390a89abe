#pragma once

// Verification reports: a list of checks, each comparing a computed value
// with an expected one, with the arithmetic that produced it.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cohiggs {

struct Check {
  std::string id;
  /// Short description of the claim being checked.
  std::string citation;
  std::string route;
  nlohmann::json computed;
  nlohmann::json expected;
  bool pass = false;
  std::vector<std::string> ledger;

  nlohmann::json to_json() const;
};

/// Check with pass = (computed == expected).
Check make_check(std::string id, std::string citation, std::string route, nlohmann::json computed,
                 nlohmann::json expected, std::vector<std::string> ledger = {});

class VerificationReport {
 public:
  static constexpr int kVersion = 1;

  explicit VerificationReport(std::uint64_t seed = 0) : seed_(seed) {}

  void add(Check c);
  void add(std::vector<Check> cs);

  std::uint64_t seed() const { return seed_; }
  /// Sorted by id.
  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  std::vector<std::string> failing_ids() const;
  /// id -> pass, the part of a report that must not depend on the seed.
  std::vector<std::pair<std::string, bool>> verdicts() const;

  nlohmann::json to_json() const;
  std::string to_markdown() const;

 private:
  std::uint64_t seed_;
  std::vector<Check> checks_;
};

}  // namespace cohiggs
