#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cohiggs/errors.hpp"
#include "cohiggs/exactlin.hpp"
#include "cohiggs/sampling.hpp"

using namespace cohiggs;

namespace {

Matrix random_matrix(Sampler& rng, std::size_t r, std::size_t c, long bound = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(bound);
  return m;
}

// Low-rank product so the rank is not always maximal.
Matrix random_low_rank(Sampler& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k) * random_matrix(rng, k, c);
}

}  // namespace

TEST(ExactLin, ScalarParsingIsCanonical) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(to_string(parse_scalar("-10/5")), "-2");
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
}

TEST(ExactLin, RankOfIdentityAndZero) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix(4, 7)), 0u);
  EXPECT_EQ(kernel_basis(Matrix(4, 7)).size(), 7u);
}

TEST(ExactLin, KernelOfDifferenceRow) {
  Matrix m = Matrix::from_rows({{Scalar(1), Scalar(-1)}}, 2);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{1, 1}));
}

TEST(ExactLin, SolveConsistentAndInconsistent) {
  Matrix m = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  auto x = solve(m, {3, 6});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (Vector{3, 6}));
  EXPECT_FALSE(solve(m, {3, 7}).has_value());
}

TEST(ExactLin, QuotientDimensionExamples) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < 4; ++i) e.push_back(unit_vector(4, i));
  EXPECT_EQ(subspace_quotient_dim(e, {unit_vector(4, 0)}), 3u);
  EXPECT_EQ(subspace_quotient_dim(e, e), 0u);
}

TEST(ExactLin, QuotientRejectsNonContainedSubspace) {
  std::vector<Vector> a{unit_vector(3, 0), unit_vector(3, 1)};
  EXPECT_THROW(subspace_quotient_dim(a, {unit_vector(3, 2)}), ContainmentViolation);
}

TEST(ExactLin, RrefIsIdempotentAndReduced) {
  Sampler rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_low_rank(rng, 5, 6, 3);
    auto e = rref(m);
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.reduced(i, e.pivots[i]), 1);
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (r != i) EXPECT_EQ(e.reduced(r, e.pivots[i]), 0);
    }
  }
}

TEST(ExactLin, RankEqualsRankOfTranspose) {
  Sampler rng(11);
  for (int t = 0; t < 30; ++t) {
    auto k = static_cast<std::size_t>(rng.integer(0, 4));
    Matrix m = k == 0 ? Matrix(4, 5) : random_low_rank(rng, 4, 5, k);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(ExactLin, RankNullityAndKernelIsAnnihilated) {
  Sampler rng(12);
  for (int t = 0; t < 30; ++t) {
    auto k = static_cast<std::size_t>(rng.integer(1, 5));
    Matrix m = random_low_rank(rng, 5, 7, k);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), m.cols());
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(ExactLin, RankIsPermutationInvariant) {
  Sampler rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_low_rank(rng, 4, 6, 2);
    std::vector<std::size_t> rows(4), cols(6);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng.engine());
    std::shuffle(cols.begin(), cols.end(), rng.engine());
    EXPECT_EQ(rank(m), rank(m.permuted(rows, cols)));
  }
}

TEST(ExactLin, CanonicalBasisDependsOnlyOnSpan) {
  Sampler rng(14);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vector> vs{rng.vector(5), rng.vector(5), rng.vector(5)};
    std::vector<Vector> mixed{add(vs[0], vs[1]), scale(Scalar(3), vs[2]), sub(vs[1], vs[2])};
    EXPECT_EQ(canonical_basis(vs, 5), canonical_basis(mixed, 5));
    EXPECT_EQ(span_dim(vs, 5), canonical_basis(vs, 5).size());
  }
}

TEST(ExactLin, SubspaceReductionGivesCanonicalCosetRepresentatives) {
  Sampler rng(15);
  for (int t = 0; t < 20; ++t) {
    Subspace u({rng.vector(6), rng.vector(6)}, 6);
    Vector v = rng.vector(6);
    Vector w = add(v, add(scale(rng.rational(), u.basis()[0]), scale(rng.rational(), u.basis().back())));
    EXPECT_EQ(u.reduce(v), u.reduce(w));
    EXPECT_EQ(u.quotient_coordinates(v).size(), 6 - u.dim());
    EXPECT_EQ(u.reduce(u.lift(u.quotient_coordinates(v))), u.reduce(v));
    for (const auto& b : u.basis()) EXPECT_TRUE(u.contains(b));
  }
}

TEST(ExactLin, MatrixProductIsAssociative) {
  Sampler rng(16);
  Matrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 5);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * Matrix::identity(4), a);
}
