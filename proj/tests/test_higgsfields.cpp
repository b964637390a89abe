#include <gtest/gtest.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/higgsfields.hpp"

using namespace cohiggs;

namespace {

const SplitBundle kShifted{0, -1};
const SplitBundle kTrivial{0, 0};

TwistedVectorField random_field(Sampler& rng, int d) {
  return TwistedVectorField::from_coordinates(d, rng.vector(tfield_dim(d)));
}

SplitHiggs random_split(Sampler& rng, SplitBundle b) {
  return SplitHiggs(b, random_field(rng, 0), random_field(rng, b.delta()), random_field(rng, -b.delta()));
}

// Integrable field lambda C, mu C with random data and nonzero C.
SplitHiggs random_integrable(Sampler& rng, SplitBundle b) {
  auto c = TwistedVectorField::from_coordinates(-b.delta(), rng.nonzero_vector(tfield_dim(-b.delta())));
  auto sol = solve_integrable(c, b);
  return sol.field(rng.poly(Grading::plane(b.delta())), rng.poly(Grading::plane(2 * b.delta())));
}

}  // namespace

TEST(SplitBundles, ParseAndPrint) {
  EXPECT_EQ(parse_split_bundle("split:0,-1"), kShifted);
  EXPECT_EQ(parse_split_bundle("split:0,-1").to_string(), "split:0,-1");
  EXPECT_EQ((SplitBundle{-1, 0}).normalized(), kShifted);
  EXPECT_THROW(parse_split_bundle("split:0"), ParseError);
  EXPECT_THROW(parse_split_bundle("tangent"), ParseError);
}

TEST(SplitBundles, ComponentsMustMatchTheBundle) {
  auto c = TwistedVectorField::constant(1, 0, 0);
  EXPECT_THROW(SplitHiggs(kTrivial, TwistedVectorField::zero(0), TwistedVectorField::zero(0), c), GradingMismatch);
}

TEST(PhiWedgePhi, VanishesOnTheIntegrableFamily) {
  EXPECT_TRUE(is_integrable(SplitHiggs::zero(kShifted)));
  auto c = TwistedVectorField::constant(1, 0, 0);
  EXPECT_TRUE(is_integrable(SplitHiggs(kShifted, TwistedVectorField::zero(0), TwistedVectorField::zero(1), c)));
  Sampler rng(1);
  for (int t = 0; t < 20; ++t) {
    auto h = random_integrable(rng, t % 2 ? kShifted : kTrivial);
    for (const auto& e : phi_wedge_phi(h)) EXPECT_TRUE(e.is_zero());
  }
}

TEST(PhiWedgePhi, GenericFieldIsNotIntegrable) {
  Sampler rng(2);
  int nonzero = 0;
  for (int t = 0; t < 20; ++t) nonzero += is_integrable(random_split(rng, kShifted)) ? 0 : 1;
  EXPECT_EQ(nonzero, 20);
}

TEST(Stability, SplitBundleCriteria) {
  auto zero0 = TwistedVectorField::zero(0);
  auto s = is_stable_split(SplitHiggs(kShifted, zero0, TwistedVectorField::zero(1), TwistedVectorField::zero(-1)));
  EXPECT_EQ(s.status, Stability::Unstable);
  EXPECT_FALSE(s.witness.empty());
  auto c = TwistedVectorField::constant(1, 0, 0);
  EXPECT_TRUE(is_stable_split(SplitHiggs(kShifted, zero0, TwistedVectorField::zero(1), c)).stable());
  auto c0 = parse_vector_field("x1, x2, x0", 0);
  EXPECT_EQ(is_stable_split(SplitHiggs(kTrivial, zero0, zero0, c0)).status, Stability::StrictlySemistable);
  EXPECT_TRUE(is_stable_split(SplitHiggs(kTrivial, zero0, c0, c0)).stable());
  EXPECT_EQ(is_stable_split(SplitHiggs::zero({0, -2})).status, Stability::Unstable);
}

TEST(Solver, ShiftedBundleWithConstantField) {
  auto sol = solve_integrable(TwistedVectorField::constant(1, 0, 0), kShifted);
  EXPECT_EQ(sol.a_space.size(), 3u);
  EXPECT_EQ(sol.b_space.size(), 6u);
  EXPECT_EQ(sol.lambda_basis.size(), 3u);
  EXPECT_EQ(sol.mu_basis.size(), 6u);
  EXPECT_TRUE(sol.simple_parametrization);
}

TEST(Solver, WedgeMatrixHasRankFive) {
  Sampler rng(3);
  for (int t = 0; t < 10; ++t) {
    auto c = TwistedVectorField::from_coordinates(-1, rng.nonzero_vector(3));
    Matrix m = wedge_matrix(0, c);
    EXPECT_EQ(m.cols(), 8u);
    EXPECT_EQ(rank(m), 5u);
    EXPECT_EQ(kernel_basis(m).size(), 3u);
  }
}

TEST(Solver, TrivialBundleHasScalarSolutions) {
  auto sol = solve_integrable(parse_vector_field("x1, x2, x0", 0), kTrivial);
  EXPECT_EQ(sol.a_space.size(), 1u);
  EXPECT_EQ(sol.b_space.size(), 1u);
  EXPECT_TRUE(sol.simple_parametrization);
}

TEST(Solver, SolutionsFactorThroughC) {
  Sampler rng(4);
  for (int t = 0; t < 10; ++t) {
    auto c = TwistedVectorField::from_coordinates(-1, rng.nonzero_vector(3));
    auto sol = solve_integrable(c, kShifted);
    for (const auto& a : sol.a_space) {
      EXPECT_TRUE(wedge(a, c).is_zero());
      EXPECT_TRUE(factor_through(a, c).has_value());
    }
    for (const auto& b : sol.b_space) EXPECT_TRUE(factor_through(b, c).has_value());
  }
}

TEST(Solver, RejectsZeroFieldAndWideSplittings) {
  EXPECT_THROW(solve_integrable(TwistedVectorField::zero(-1), kShifted), ZeroSection);
  EXPECT_THROW(solve_integrable(TwistedVectorField::zero(-2), {0, -2}), DomainError);
}

TEST(GaugeNormalForm, Examples) {
  auto c = TwistedVectorField::constant(1, 0, 0);
  auto sol = solve_integrable(c, kShifted);
  Poly x0 = coordinate(0), x1 = coordinate(1), x2 = coordinate(2);

  auto zero = gauge_normalize(sol.field(Poly::zero(Grading::plane(1)), Poly::zero(Grading::plane(2))));
  EXPECT_TRUE(zero.form.q.is_zero());

  auto killed = gauge_normalize(sol.field(x0, -(x0 * x0)), x0, -(x0 * x0));
  EXPECT_TRUE(killed.form.q.is_zero());
  EXPECT_FALSE(killed.lambda.is_zero());

  auto n = gauge_normalize(sol.field(x0, x1 * x2), x0, x1 * x2);
  EXPECT_EQ(n.form.q, x0 * x0 + x1 * x2);
  EXPECT_EQ(n.form.c, c);
}

TEST(GaugeNormalForm, GaugeConjugatesToTheNormalForm) {
  Sampler rng(5);
  for (int t = 0; t < 20; ++t) {
    SplitBundle b = t % 2 ? kShifted : kTrivial;
    auto h = random_integrable(rng, b);
    if (!is_stable_split(h).stable()) continue;
    auto n = gauge_normalize(h);
    EXPECT_EQ(conjugate(h, n.gauge), n.form.field(b));
    EXPECT_EQ(n.form, n.form.canonical());
  }
}

TEST(GaugeNormalForm, Rejections) {
  auto zero0 = TwistedVectorField::zero(0);
  EXPECT_THROW(gauge_normalize(SplitHiggs::zero(kShifted)), NotStable);
  auto c = TwistedVectorField::constant(1, 0, 0);
  auto a = parse_vector_field("0, x2, 0", 0);
  EXPECT_THROW(gauge_normalize(SplitHiggs(kShifted, a, TwistedVectorField::zero(1), c)), NotIntegrable);
  EXPECT_THROW(conjugate(SplitHiggs(kShifted, zero0, TwistedVectorField::zero(1), c), SplitGauge::diagonal(0, 1, 1)),
               DomainError);
}

TEST(GaugeNormalForm, ConjugationPreservesIntegrabilityAndDeterminant) {
  Sampler rng(6);
  for (int t = 0; t < 10; ++t) {
    auto h = random_split(rng, kShifted);
    auto g = SplitGauge::upper(rng.poly(Grading::plane(1)), rng.nonzero_rational());
    auto k = conjugate(h, g);
    EXPECT_EQ(is_integrable(k), is_integrable(h));
    EXPECT_EQ(hitchin_det(k), hitchin_det(h));
  }
}

TEST(Orbits, ScalingExamples) {
  auto c = TwistedVectorField::constant(1, 0, 0);
  Poly q = parse_poly("x0^2 + x1*x2");
  NormalForm n(q, c);
  EXPECT_TRUE(orbit_equal(n, NormalForm(q * Scalar(1, 4), Scalar(2) * c)));
  EXPECT_FALSE(orbit_equal(n, NormalForm(q, Scalar(2) * c)));
  NormalForm z(Poly::zero(Grading::plane(2)), c);
  EXPECT_TRUE(orbit_equal(z, NormalForm(Poly::zero(Grading::plane(2)), Scalar(-7, 3) * c)));
  EXPECT_EQ(n.scaled(3).canonical(), n.canonical());
}

TEST(Orbits, NilpotentFormsOnTrivialBundleAreIdentified) {
  auto c1 = parse_vector_field("x1, x2, x0", 0);
  auto c2 = parse_vector_field("x2, 0, x1", 0);
  NormalForm a(Poly::zero(Grading::plane(0)), c1), b(Poly::zero(Grading::plane(0)), c2);
  EXPECT_FALSE(orbit_equal(a, b));
  EXPECT_TRUE(s_equivalent(a, b));
}

TEST(HitchinMap, DeterminantExamples) {
  auto c = TwistedVectorField::constant(1, 0, 0);
  EXPECT_TRUE(hitchin_det(NormalForm(Poly::zero(Grading::plane(2)), c)).is_zero());
  Sampler rng(7);
  auto c0 = random_field(rng, 0);
  EXPECT_EQ(hitchin_det(NormalForm(Poly::constant(1), c0)), -sym_prod(c0, c0));
  EXPECT_EQ(hitchin_det(NormalForm(Poly::constant(1), c0).field(kTrivial)), -sym_prod(c0, c0));
}

TEST(HitchinMap, InjectiveOnStableTrivialBundleOrbits) {
  Sampler rng(8);
  int distinct = 0;
  for (int t = 0; t < 100; ++t) {
    NormalForm n1(Poly::constant(rng.nonzero_rational()), TwistedVectorField::from_coordinates(0, rng.nonzero_vector(8)));
    NormalForm n2 = t % 4 == 0 ? n1.scaled(rng.nonzero_rational())
                               : NormalForm(Poly::constant(rng.nonzero_rational()),
                                            TwistedVectorField::from_coordinates(0, rng.nonzero_vector(8)));
    bool same_orbit = orbit_equal(n1, n2);
    EXPECT_EQ(hitchin_det(n1) == hitchin_det(n2), same_orbit);
    distinct += same_orbit ? 0 : 1;
  }
  EXPECT_GT(distinct, 50);
}

TEST(HitchinMap, Nilpotency) {
  auto c = TwistedVectorField::constant(0, 1, 0);
  EXPECT_TRUE(is_nilpotent(NormalForm(Poly::zero(Grading::plane(2)), c)));
  EXPECT_FALSE(is_nilpotent(NormalForm(parse_poly("x0*x2"), c)));
  Sampler rng(9);
  for (int t = 0; t < 10; ++t) EXPECT_FALSE(is_nilpotent(random_split(rng, kShifted)));
}

TEST(Regularity, FieldVanishesExactlyAtTheZeroOfC) {
  Sampler rng(10);
  for (int t = 0; t < 10; ++t) {
    auto c = TwistedVectorField::from_coordinates(-1, rng.nonzero_vector(3));
    auto p = zero_locus(c);
    std::vector<ProjectivePoint> pts{p, ProjectivePoint(1, 0, 0), ProjectivePoint(0, 1, 0), ProjectivePoint(0, 0, 1),
                                     ProjectivePoint(1, 1, 1)};
    auto r = regularity_check(NormalForm(rng.poly(Grading::plane(2)), c).field(kShifted), pts);
    EXPECT_EQ(r.checked.size(), pts.size());
    ASSERT_GE(r.non_regular.size(), 1u);
    for (const auto& bad : r.non_regular) EXPECT_EQ(bad, p);
  }
}

TEST(JsonInput, SplitAndTangentFields) {
  auto j = nlohmann::json::parse(R"({"bundle":"split:0,-1","A":"0,0,0","B":"0,0,0","C":"1,0,0"})");
  auto h = higgs_from_json(j);
  ASSERT_TRUE(std::holds_alternative<SplitHiggs>(h));
  EXPECT_EQ(std::get<SplitHiggs>(h).c(), TwistedVectorField::constant(1, 0, 0));
  EXPECT_EQ(higgs_from_json(to_json(std::get<SplitHiggs>(h))), h);
  nlohmann::json t{{"bundle", "tangent"}, {"coeffs", std::vector<std::string>(18, "1/2")}};
  ASSERT_TRUE(std::holds_alternative<TangentHiggs>(higgs_from_json(t)));
  EXPECT_THROW(higgs_from_json(nlohmann::json{{"bundle", "tangent"}}), ParseError);
}

TEST(TangentFields, SimpleTensorsAreIntegrable) {
  Vector zero(18, 0);
  EXPECT_TRUE(is_zero(tangent_wedge(TangentHiggs::from_flat(zero))));
  EXPECT_TRUE(simple_tensor_test(TangentHiggs::from_flat(zero)));
  Sampler rng(11);
  for (int t = 0; t < 10; ++t) {
    auto h = TangentHiggs::simple(rng.nonzero_vector(6), rng.nonzero_vector(3));
    EXPECT_TRUE(simple_tensor_test(h));
    EXPECT_TRUE(is_zero(tangent_wedge(h)));
  }
}

TEST(TangentFields, TwoTermTableIsNotIntegrable) {
  const auto& fam = tangent_family();
  EXPECT_FALSE(endoT_commutator(fam.phi[0], fam.phi[1]).is_zero());
  Matrix a(6, 3);
  a(0, 0) = 1;
  a(1, 1) = 1;
  TangentHiggs h(a);
  EXPECT_FALSE(simple_tensor_test(h));
  EXPECT_FALSE(is_zero(tangent_wedge(h)));
}

TEST(TangentFields, RandomRankTwoTablesAreNotIntegrable) {
  Sampler rng(12);
  for (int t = 0; t < 100; ++t) {
    Matrix a(6, 3);
    Vector u1 = rng.nonzero_vector(6), u2 = rng.nonzero_vector(6), v1 = rng.nonzero_vector(3), v2 = rng.nonzero_vector(3);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = u1[i] * v1[j] + u2[i] * v2[j];
    TangentHiggs h(a);
    EXPECT_EQ(simple_tensor_test(h), is_zero(tangent_wedge(h)));
  }
}

TEST(TangentFields, FactorRecoversTheTensor) {
  Sampler rng(13);
  auto h = TangentHiggs::simple(rng.nonzero_vector(6), rng.nonzero_vector(3));
  auto [phi, c] = tangent_factor(h);
  EXPECT_FALSE(phi.is_zero());
  EXPECT_FALSE(c.is_zero());
  Matrix a(6, 3);
  a(0, 0) = 1;
  a(1, 1) = 1;
  EXPECT_THROW(tangent_factor(TangentHiggs(a)), NotSimpleTensor);
}

TEST(TangentFields, PairingIsSymmetric) {
  Sampler rng(14);
  auto a = TangentHiggs::from_flat(rng.vector(18)), b = TangentHiggs::from_flat(rng.vector(18));
  EXPECT_EQ(tangent_pairing(a, b), tangent_pairing(b, a));
  EXPECT_EQ(tangent_pairing(a, a), tangent_wedge(a));
}

TEST(TangentFields, CommutatorRankIsFiveAtRandomFields) {
  Sampler rng(15);
  for (int t = 0; t < 10; ++t) {
    auto phi = EndoTSection::from_basis_coordinates(1, rng.nonzero_vector(6));
    EXPECT_EQ(commutator_rank(phi), 5u);
  }
}

TEST(TangentFields, DeterminantDoubleCover) {
  EXPECT_TRUE(EndoTSection::zero(1).det().is_zero());
  Sampler rng(16);
  auto phi = EndoTSection::from_basis_coordinates(1, rng.nonzero_vector(6));
  EXPECT_EQ((-phi).det(), phi.det());
  EXPECT_EQ(det_polarization(phi, phi), phi.det());
  EXPECT_EQ(rank(det_jacobian(phi)), 6u);
  auto report = det_double_cover_probe(20, rng);
  EXPECT_EQ(report.samples, 20u);
  EXPECT_TRUE(report.passed());
}
