#pragma once

// The acceptance suite: twelve criteria, each a list of checks with the
// expected values written out. Sampled checks report counts, so verdicts do
// not depend on the seed; the seed only changes the witnesses in the ledgers.

#include <cstdint>
#include <string>
#include <vector>

#include "cohiggs/report.hpp"
#include "cohiggs/sheafdim.hpp"

namespace cohiggs {

struct Criterion {
  int number = 0;
  std::string title;
  /// Wall-clock budget in seconds.
  double time_limit = 0;
  std::vector<Check> (*run)(std::uint64_t seed) = nullptr;
};

const std::vector<Criterion>& acceptance_criteria();

/// Every criterion, merged into one report sorted by check id.
VerificationReport verify_all(std::uint64_t seed);

/// (h0, h1, h2) of T(d) from the Euler sequence.
CohomProfile tangent_profile(long d);
/// (h0, h1, h2) of End_0 T(d) for d >= 0, from 0 -> End T(d) -> T(d-1)^3 -> T(d) -> 0
/// with the rank of H0(T(d-1))^3 -> H0(T(d)) computed explicitly.
CohomProfile end0_tangent_profile(long d);

}  // namespace cohiggs
