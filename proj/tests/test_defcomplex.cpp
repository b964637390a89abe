#include <gtest/gtest.h>

#include <algorithm>

#include "cohiggs/defcomplex.hpp"
#include "cohiggs/errors.hpp"

using namespace cohiggs;

namespace {

const SplitBundle kShifted{0, -1};
const SplitBundle kTrivial{0, 0};

Vector middle_coordinates(const TwistedVectorField& a, const TwistedVectorField& b, const TwistedVectorField& c) {
  return concat({a.coordinates(), b.coordinates(), c.coordinates()});
}

TwistedVectorField stable_c(Sampler& rng, SplitBundle b) {
  return TwistedVectorField::from_coordinates(-b.delta(), rng.nonzero_vector(tfield_dim(-b.delta())));
}

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
  return std::any_of(lines.begin(), lines.end(), [&](const std::string& l) { return l.find(needle) != std::string::npos; });
}

}  // namespace

TEST(HyperCohomology, SpectralSequenceArithmetic) {
  EXPECT_EQ(hyper_h1(3, 5, 0), 8);
  EXPECT_EQ(hyper_h1(0, 0, 0), 0);
  EXPECT_EQ(hyper_h1(8, 0, 0), 8);
  EXPECT_THROW(hyper_h1(3, 1, 2), RankExceedsSource);
}

TEST(HyperCohomology, MonotoneInEachTerm) {
  for (long a = 0; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b)
      for (long r = 0; r <= b; ++r) {
        EXPECT_LE(hyper_h1(a, b, r), hyper_h1(a + 1, b, r));
        EXPECT_LE(hyper_h1(a, b, r), hyper_h1(a, b + 1, r));
        if (r > 0) EXPECT_GE(hyper_h1(a, b, r - 1), hyper_h1(a, b, r));
      }
}

TEST(SplitComplex, ComposesToZero) {
  Sampler rng(1);
  for (SplitBundle b : {kShifted, kTrivial}) {
    for (int t = 0; t < 5; ++t) {
      auto sol = solve_integrable(stable_c(rng, b), b);
      auto h = sol.field(rng.poly(Grading::plane(b.delta())), rng.poly(Grading::plane(2 * b.delta())));
      auto cx = split_complex(h);
      EXPECT_EQ(cx.d0.rows(), cx.d1.cols());
      Matrix composite = cx.d1 * cx.d0;
      EXPECT_EQ(rank(composite), 0u);
    }
  }
}

TEST(SplitComplex, ShiftedBundleDimensions) {
  auto c = TwistedVectorField::constant(1, 0, 0);
  auto h = NormalForm(parse_poly("x0^2 + x1*x2"), c).field(kShifted);
  auto cx = split_complex(h);
  EXPECT_EQ(cx.d0.cols(), 4u);
  EXPECT_EQ(cx.d0.rows(), 26u);
  EXPECT_EQ(cx.d1.rows(), 31u);
  EXPECT_EQ(rank(cx.d0), 4u);
  EXPECT_EQ(kernel_basis(cx.d1).size(), 12u);
  auto e = split_e2(h);
  EXPECT_EQ(e.e2_10, 8);
  EXPECT_EQ(e.e2_01, 0);
  EXPECT_EQ(e.h1, 8);
}

TEST(SplitComplex, TrivialBundleDimensions) {
  auto c = parse_vector_field("x1, x2, x0", 0);
  auto h = NormalForm(Poly::constant(3), c).field(kTrivial);
  auto cx = split_complex(h);
  EXPECT_EQ(cx.d0.cols(), 3u);
  EXPECT_EQ(cx.d0.rows(), 24u);
  EXPECT_EQ(cx.d1.rows(), 30u);
  EXPECT_EQ(rank(cx.d0), 2u);
  EXPECT_EQ(kernel_basis(cx.d1).size(), 10u);
  EXPECT_EQ(split_e2(h).h1, 8);
}

TEST(SplitComplex, TangentsToTheIntegrableFamilyAreCocycles) {
  Sampler rng(2);
  for (SplitBundle b : {kShifted, kTrivial}) {
    for (int t = 0; t < 5; ++t) {
      auto c = stable_c(rng, b);
      auto sol = solve_integrable(c, b);
      Poly lambda = rng.poly(Grading::plane(b.delta())), mu = rng.poly(Grading::plane(2 * b.delta()));
      auto h = sol.field(lambda, mu);
      auto cx = split_complex(h);
      // Derivative of (lambda C, mu C, C) along (lambda', mu', C').
      auto c1 = TwistedVectorField::from_coordinates(c.twist(), rng.vector(tfield_dim(c.twist())));
      Poly l1 = rng.poly(lambda.grading()), m1 = rng.poly(mu.grading());
      Vector v = middle_coordinates(l1 * c + lambda * c1, m1 * c + mu * c1, c1);
      EXPECT_TRUE(is_zero(cx.d1.apply(v)));
    }
  }
}

TEST(SplitE2, RequiresStableIntegrableFields) {
  EXPECT_THROW(split_e2(SplitHiggs::zero(kShifted)), NotStable);
  auto c = TwistedVectorField::constant(1, 0, 0);
  auto a = parse_vector_field("0, x2, 0", 0);
  EXPECT_THROW(split_e2(SplitHiggs(kShifted, a, TwistedVectorField::zero(1), c)), NotIntegrable);
}

TEST(SplitE2, InvariantUnderGaugeAndScaling) {
  Sampler rng(3);
  for (int t = 0; t < 5; ++t) {
    auto c = stable_c(rng, kShifted);
    NormalForm n(rng.poly(Grading::plane(2)), c);
    auto base = split_e2(n.field(kShifted));
    EXPECT_EQ(base.h1, 8);
    EXPECT_EQ(split_e2(kShifted, n.scaled(rng.nonzero_rational())), base);
    auto g = SplitGauge::upper(rng.poly(Grading::plane(1)), rng.nonzero_rational());
    EXPECT_EQ(split_e2(conjugate(n.field(kShifted), g)), base);
  }
}

TEST(SplitE2, NilpotentFieldRecordsAnAssumption) {
  auto c = TwistedVectorField::constant(0, 0, 1);
  auto e = split_e2(kShifted, NormalForm(Poly::zero(Grading::plane(2)), c));
  EXPECT_EQ(e.h1, 8);
  EXPECT_FALSE(e.assumptions.empty());
}

TEST(TangentE2, SimpleTensorsGiveEight) {
  Sampler rng(4);
  for (int t = 0; t < 3; ++t) {
    Vector u = rng.nonzero_vector(6), v = rng.nonzero_vector(3);
    auto e = tangent_e2(TangentHiggs::simple(u, v));
    EXPECT_EQ(e.e2_10, 8);
    EXPECT_EQ(e.e2_01, 0);
    EXPECT_EQ(e.h1, 8);
    EXPECT_EQ(tangent_e2(TangentHiggs::simple(u, scale(Scalar(5, 2), v))), e);
    EXPECT_EQ(rank(tangent_linearization(TangentHiggs::simple(u, v))), 10u);
  }
}

TEST(TangentE2, RejectsZeroAndNonSimpleTables) {
  EXPECT_THROW(tangent_e2(TangentHiggs::from_flat(Vector(18, 0))), NotSimpleTensor);
  Matrix a(6, 3);
  a(0, 0) = 1;
  a(1, 1) = 1;
  EXPECT_THROW(tangent_e2(TangentHiggs(a)), NotSimpleTensor);
}

TEST(SchwarzE2, ModuliDimensionIsEight) {
  for (long k : {3L, 4L, 5L, 6L, 7L, 12L}) {
    auto e = schwarz_e2(k);
    EXPECT_EQ(e.e2_10, 3) << k;
    EXPECT_EQ(e.e2_01, 5) << k;
    EXPECT_EQ(e.d2_rank, 0) << k;
    EXPECT_EQ(e.h1, 8) << k;
    EXPECT_FALSE(e.ledger.empty());
  }
  EXPECT_TRUE(mentions(schwarz_e2(3).ledger, "1 + 2 = 3"));
  EXPECT_THROW(schwarz_e2(2), DomainError);
}

TEST(SchwarzE2, PointConstraintCount) {
  auto r = point_constraint_ledger();
  EXPECT_EQ(r.linear_through_point, 2);
  EXPECT_TRUE(mentions(r.ledger, "3 - 1 = 2"));
}

TEST(SchwarzE2, SummaryJson) {
  auto j = schwarz_e2(5).to_json();
  EXPECT_EQ(j["h1"], 8);
  EXPECT_EQ(j["e2_10"], 3);
  EXPECT_EQ(j["e2_01"], 5);
}
