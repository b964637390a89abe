#include "cohiggs/report.hpp"

#include <algorithm>
#include <sstream>

namespace cohiggs {

nlohmann::json Check::to_json() const {
  return {{"id", id},
          {"citation", citation},
          {"route", route},
          {"computed", computed},
          {"expected", expected},
          {"status", pass ? "pass" : "fail"},
          {"ledger", ledger}};
}

Check make_check(std::string id, std::string citation, std::string route, nlohmann::json computed,
                 nlohmann::json expected, std::vector<std::string> ledger) {
  Check c;
  c.pass = computed == expected;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.route = std::move(route);
  c.computed = std::move(computed);
  c.expected = std::move(expected);
  c.ledger = std::move(ledger);
  return c;
}

void VerificationReport::add(Check c) {
  auto pos = std::upper_bound(checks_.begin(), checks_.end(), c.id,
                              [](const std::string& id, const Check& x) { return id < x.id; });
  checks_.insert(pos, std::move(c));
}

void VerificationReport::add(std::vector<Check> cs) {
  for (auto& c : cs) add(std::move(c));
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> VerificationReport::failing_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.pass) out.push_back(c.id);
  return out;
}

std::vector<std::pair<std::string, bool>> VerificationReport::verdicts() const {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& c : checks_) out.emplace_back(c.id, c.pass);
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) checks.push_back(c.to_json());
  return {{"version", kVersion}, {"seed", seed_}, {"checks", checks}};
}

std::string VerificationReport::to_markdown() const {
  std::ostringstream out;
  out << "| id | status | computed | expected | route |\n|---|---|---|---|---|\n";
  for (const auto& c : checks_) {
    out << "| " << c.id << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.computed.dump() << " | "
        << c.expected.dump() << " | " << c.route << " |\n";
  }
  const auto failing = failing_ids();
  out << "\n" << checks_.size() - failing.size() << " of " << checks_.size() << " checks pass\n";
  return out.str();
}

}  // namespace cohiggs
