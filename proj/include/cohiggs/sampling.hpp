#pragma once

// Seeded random generation of exact test data. All randomness in the library
// flows through a Sampler built from an explicit seed, so reports and test
// runs are reproducible.

#include <cstdint>
#include <random>

#include "cohiggs/exactlin.hpp"
#include "cohiggs/polyring.hpp"

namespace cohiggs {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p / q with p in [-bound, bound] and q in [1, 3].
  Scalar rational(long bound = 5);
  Scalar nonzero_rational(long bound = 5);
  Vector vector(std::size_t n, long bound = 5);
  Vector nonzero_vector(std::size_t n, long bound = 5);
  Poly poly(const Grading& g, long bound = 5);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cohiggs
