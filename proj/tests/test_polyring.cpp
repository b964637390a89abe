#include <gtest/gtest.h>

#include <set>

#include "cohiggs/errors.hpp"
#include "cohiggs/polyring.hpp"
#include "cohiggs/sampling.hpp"

using namespace cohiggs;

TEST(PolyRing, BasisSizes) {
  EXPECT_EQ(basis_size(Grading::plane(2)), 6u);
  EXPECT_EQ(basis_size(Grading::plane(0)), 1u);
  EXPECT_EQ(basis_size(Grading::plane(-1)), 0u);
  EXPECT_EQ(basis_size(Grading::bi(1, 3)), 8u);
  EXPECT_EQ(basis_size(Grading::bi(-1, 3)), 0u);
}

TEST(PolyRing, BasisMatchesMonomialCountsUpToDegreeTwelve) {
  for (int d = 0; d <= 12; ++d) {
    auto b = basis(Grading::plane(d));
    EXPECT_EQ(b.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    std::set<Exponent> seen(b.begin(), b.end());
    EXPECT_EQ(seen.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(b[i][0] + b[i][1] + b[i][2], d);
      EXPECT_EQ(basis_index(Grading::plane(d), b[i]), i);
      if (i > 0) EXPECT_GT(b[i - 1], b[i]);
    }
  }
  for (int a = 0; a <= 6; ++a)
    for (int c = 0; c <= 6; ++c)
      EXPECT_EQ(basis(Grading::bi(a, c)).size(), static_cast<std::size_t>((a + 1) * (c + 1)));
}

TEST(PolyRing, FirstMonomialIsHighestPowerOfX0) {
  auto b = basis(Grading::plane(2));
  EXPECT_EQ(b.front(), (Exponent{2, 0, 0, 0}));
  EXPECT_EQ(b.back(), (Exponent{0, 0, 2, 0}));
}

TEST(PolyRing, MultiplicationExamples) {
  Poly x0 = Poly::variable(0), x1 = Poly::variable(1), x2 = Poly::variable(2);
  EXPECT_EQ((x0 + x1) * (x0 - x1), x0 * x0 - x1 * x1);
  EXPECT_EQ(((x0 + x1) * (x0 - x1)).grading(), Grading::plane(2));
  EXPECT_EQ((x2 * x2).coord_vector(), unit_vector(6, 5));
  Poly s0 = Poly::variable(0, Family::Quadric), t1 = Poly::variable(3, Family::Quadric);
  EXPECT_EQ((s0 * t1).grading(), Grading::bi(1, 1));
  EXPECT_THROW(x0 * s0, GradingMismatch);
  EXPECT_THROW(x0 + x0 * x1, GradingMismatch);
}

TEST(PolyRing, ParsingExamples) {
  Poly p = parse_poly("x0^2 + x1*x2");
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.degree(), 2);
  Poly q = parse_poly("2/3*x0*x1 - x2^2");
  EXPECT_EQ(q.coefficient({1, 1, 0, 0}), Scalar(2, 3));
  EXPECT_EQ(q.coefficient({0, 0, 2, 0}), Scalar(-1));
  EXPECT_EQ(parse_poly("s0*t1 + s1*t0").grading(), Grading::bi(1, 1));
  EXPECT_TRUE(parse_poly("0", Grading::plane(3)).is_zero());
  EXPECT_EQ(parse_poly("0", Grading::plane(3)).grading(), Grading::plane(3));
}

TEST(PolyRing, ParsingErrors) {
  EXPECT_THROW(parse_poly("x0 + x1^2"), NonHomogeneous);
  EXPECT_THROW(parse_poly("x0 +"), ParseError);
  EXPECT_THROW(parse_poly("x3"), ParseError);
  EXPECT_THROW(parse_poly("x0*s0"), ParseError);
  EXPECT_THROW(parse_poly("x0", Grading::plane(2)), GradingMismatch);
  try {
    parse_poly("x0 + * x1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(PolyRing, EvaluationAndCoordinates) {
  Poly p = parse_poly("x0^2 - 3*x1*x2");
  EXPECT_EQ(p.evaluate({1, 2, 3}), Scalar(-17));
  EXPECT_EQ(Poly::from_coords(p.grading(), p.coord_vector()), p);
}

class PolyRingProperties : public ::testing::TestWithParam<int> {};

TEST_P(PolyRingProperties, RingAxiomsHold) {
  Sampler rng(static_cast<std::uint64_t>(GetParam()));
  for (int t = 0; t < 10; ++t) {
    Poly a = rng.poly(Grading::plane(static_cast<int>(rng.integer(0, 3))));
    Poly b = rng.poly(Grading::plane(static_cast<int>(rng.integer(0, 3))));
    Poly c = rng.poly(b.grading());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST_P(PolyRingProperties, PrintThenParseIsIdentity) {
  Sampler rng(static_cast<std::uint64_t>(GetParam()) + 100);
  for (int t = 0; t < 10; ++t) {
    Grading g = rng.integer(0, 1) ? Grading::plane(static_cast<int>(rng.integer(0, 4)))
                                  : Grading::bi(static_cast<int>(rng.integer(0, 3)),
                                                static_cast<int>(rng.integer(0, 3)));
    Poly p = rng.poly(g);
    EXPECT_EQ(parse_poly(p.to_string(), g), p) << p.to_string();
  }
}

TEST_P(PolyRingProperties, EvaluationIsMultiplicative) {
  Sampler rng(static_cast<std::uint64_t>(GetParam()) + 200);
  Poly a = rng.poly(Grading::plane(2)), b = rng.poly(Grading::plane(3));
  std::vector<Scalar> pt{rng.rational(), rng.rational(), rng.rational()};
  EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolyRingProperties, ::testing::Range(0, 5));
