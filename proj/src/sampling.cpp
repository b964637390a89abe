#include "cohiggs/sampling.hpp"

namespace cohiggs {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

Scalar Sampler::rational(long bound) {
  Scalar s(integer(-bound, bound), integer(1, 3));
  s.canonicalize();
  return s;
}

Scalar Sampler::nonzero_rational(long bound) {
  while (true) {
    Scalar s = rational(bound);
    if (s != 0) return s;
  }
}

Vector Sampler::vector(std::size_t n, long bound) {
  Vector v(n);
  for (auto& x : v) x = rational(bound);
  return v;
}

Vector Sampler::nonzero_vector(std::size_t n, long bound) {
  if (n == 0) throw std::invalid_argument("no nonzero vector in a zero-dimensional space");
  while (true) {
    Vector v = vector(n, bound);
    if (!is_zero(v)) return v;
  }
}

Poly Sampler::poly(const Grading& g, long bound) { return Poly::from_coords(g, vector(basis_size(g), bound)); }

}  // namespace cohiggs
