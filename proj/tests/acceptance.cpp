// One PASS/FAIL line per acceptance criterion. A criterion passes when every
// check passes and the run fits its time budget. Exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "cohiggs/verify.hpp"

using namespace cohiggs;

int main() {
  bool ok = true;
  for (const auto& c : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = c.run(0);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t failed = 0;
    for (const auto& ch : checks)
      if (!ch.pass) ++failed;
    const bool pass = error.empty() && failed == 0 && !checks.empty() && secs <= c.time_limit;
    ok = ok && pass;
    std::printf("criterion %d: %s (%.2f s of %.0f s, %zu checks, %zu failed) %s\n", c.number, pass ? "PASS" : "FAIL",
                secs, c.time_limit, checks.size(), failed, c.title.c_str());
    for (const auto& ch : checks)
      if (!ch.pass)
        std::printf("  failed %s: computed %s, expected %s\n", ch.id.c_str(), ch.computed.dump().c_str(),
                    ch.expected.dump().c_str());
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
  }

  // Verdicts must not depend on the seed.
  const auto reference = verify_all(0).verdicts();
  bool stable = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    if (verify_all(seed).verdicts() != reference) {
      std::printf("seed %llu: verdict pattern differs from seed 0\n", static_cast<unsigned long long>(seed));
      stable = false;
    }
  }
  std::printf("seed independence (seeds 0..5): %s\n", stable ? "PASS" : "FAIL");
  ok = ok && stable;
  return ok ? 0 : 1;
}
