#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cohiggs/errors.hpp"
#include "cohiggs/schwarz.hpp"

using namespace cohiggs;

namespace {

bool has_line(const std::vector<std::string>& ledger, const std::string& line) {
  return std::find(ledger.begin(), ledger.end(), line) != ledger.end();
}

using Triple = std::array<long, 3>;

std::vector<Triple> table_values(long k) {
  std::vector<Triple> out;
  for (const auto& row : build_table(k).rows) out.push_back(row.value());
  return out;
}

}  // namespace

TEST(SchwarzClosedForms, TwistedSections) {
  EXPECT_EQ(endo_twist_h0(3, 2), 10);
  EXPECT_EQ(endo_twist_h0(3, 3), 22);
  EXPECT_EQ(endo_twist_h0(4, 3), 15);
  EXPECT_EQ(endo_twist_h0(5, 3), 6);
  EXPECT_THROW(endo_twist_h0(2, 0), DomainError);
  EXPECT_THROW(endo_twist_h0(3, -1), DomainError);
}

TEST(SchwarzClosedForms, TwistedFirstCohomology) {
  EXPECT_EQ(endo_twist_h1(3, 0), 5);
  EXPECT_EQ(endo_twist_h1(3, 1), 0);
  for (long k = 4; k <= 12; ++k) EXPECT_EQ(endo_twist_h1(k, 1), k * k - 9);
  for (long k = 3; k <= 12; ++k)
    for (long d = k - 1; d <= k + 3; ++d) EXPECT_EQ(endo_twist_h1(k, d), 0);
}

TEST(SchwarzClosedForms, EulerCharacteristicIdentity) {
  for (long k = 3; k <= 12; ++k)
    for (long d = 0; d <= 8; ++d)
      EXPECT_EQ(endo_twist_h0(k, d) - endo_twist_h1(k, d), 3 * (d + 1) * (d + 2) / 2 - (k * k - 1)) << k << " " << d;
}

TEST(SchwarzClosedForms, BoundaryTermAtFirstVanishingTwist) {
  for (long k = 3; k <= 12; ++k) {
    long d = k - 1;
    EXPECT_EQ(endo_twist_h0(k, d) - d * (d + 1) / 2, 2 * k + 1);
    EXPECT_EQ(endo_twist_h1(k, d), 0);
  }
}

TEST(SchwarzClosedForms, TangentTwistedSections) {
  EXPECT_EQ(endo_tangent_h0(3), 8);
  EXPECT_EQ(endo_tangent_h0(4), 3);
  EXPECT_EQ(endo_tangent_h0(5), 3);
  EXPECT_THROW(endo_tangent_h0(2), DomainError);
}

TEST(SchwarzRoutes, KunnethMatchesClosedFormOnTwists) {
  for (long k = 3; k <= 12; ++k)
    for (long d = 0; d <= 6; ++d) {
      auto p = kunneth_route(k, SchwarzSheaf::twisted(d));
      EXPECT_EQ(p.h0(), endo_twist_h0(k, d)) << k << " " << d;
      EXPECT_EQ(p.h1(), endo_twist_h1(k, d)) << k << " " << d;
      EXPECT_EQ(p.h2(), 0);
    }
}

TEST(SchwarzRoutes, KunnethLedgerForTheTangentTwist) {
  auto p3 = kunneth_route(3, SchwarzSheaf::tangent());
  EXPECT_EQ(p3.h0(), 8);
  EXPECT_TRUE(has_line(p3.ledger, "h0(f*T) = 11"));
  EXPECT_TRUE(has_line(p3.ledger, "11 + 5 = 16"));
  EXPECT_TRUE(has_line(p3.ledger, "16 - 8 = 8"));
  auto p5 = kunneth_route(5, SchwarzSheaf::tangent());
  EXPECT_EQ(p5.h0(), 3);
  EXPECT_EQ(p5.h1(), 27);
  EXPECT_TRUE(has_line(p5.ledger, "11 - 8 = 3"));
}

TEST(SchwarzRoutes, RiemannRochExamples) {
  EXPECT_EQ(rr_chi(5, SchwarzSheaf::twisted(0)), -21);
  EXPECT_EQ(rr_chi(3, SchwarzSheaf::tangent()), 8);
  EXPECT_EQ(rr_chi(4, SchwarzSheaf::tangent()), -6);
  for (long k = 3; k <= 12; ++k) {
    EXPECT_EQ(rr_chi(k, SchwarzSheaf::tangent()), 26 - 2 * k * k);
    for (long d = 0; d <= 4; ++d)
      EXPECT_EQ(rr_chi(k, SchwarzSheaf::twisted(d)), 3 * (d + 1) * (d + 2) / 2 - (k * k - 1));
  }
}

TEST(SchwarzTables, SmallestCase) {
  EXPECT_EQ(table_values(3), (std::vector<Triple>{{0, 5, 0}, {1, 0, 0}, {10, 0, 0}, {8, 0, 0}, {22, 0, 0}}));
}

TEST(SchwarzTables, GeneralCaseAtFourAndSix) {
  EXPECT_EQ(table_values(4), (std::vector<Triple>{{0, 12, 0}, {1, 7, 0}, {3, 0, 0}, {3, 9, 0}, {15, 0, 0}}));
  EXPECT_EQ(table_values(6), (std::vector<Triple>{{0, 32, 0}, {1, 27, 0}, {3, 20, 0}, {3, 49, 0}, {6, 11, 0}}));
}

TEST(SchwarzTables, AllRoutesAgreeUpToTwelve) {
  for (long k = 3; k <= 12; ++k) {
    auto t = compute_table(k);
    EXPECT_TRUE(t.agree()) << k;
    EXPECT_TRUE(t.disagreements().empty());
    ASSERT_EQ(t.rows.size(), 5u);
    for (const auto& row : t.rows) {
      EXPECT_EQ(row.routes.size(), 3u);
      EXPECT_EQ(row.value(), table_formula(k, row.sheaf).h);
    }
  }
}

TEST(SchwarzTables, RowOrderAndLabels) {
  const auto& rows = table_rows();
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[3], SchwarzSheaf::tangent());
  EXPECT_EQ(rows[4], SchwarzSheaf::twisted(3));
}

TEST(SchwarzTables, RouteParsingAndSerialization) {
  EXPECT_EQ(parse_routes("closed,kunneth,rr").size(), 3u);
  EXPECT_EQ(parse_routes("rr"), (std::vector<Route>{Route::RiemannRoch}));
  EXPECT_THROW(parse_routes("bogus"), std::invalid_argument);
  auto t = build_table(3, parse_routes("kunneth,rr"));
  auto j = t.to_json();
  EXPECT_EQ(j["k"], 3);
  EXPECT_NE(t.to_markdown().find("22"), std::string::npos);
}

TEST(Conics, SingularityExamples) {
  EXPECT_FALSE(conic_singular(parse_poly("x0^2 + x1^2 + x2^2")));
  EXPECT_TRUE(conic_singular(parse_poly("x0*x1")));
  EXPECT_FALSE(conic_singular(parse_poly("x0*x1 - x2^2")));
  EXPECT_EQ(conic_matrix(parse_poly("x0*x1 - x2^2"))(0, 1), Scalar(1, 2));
  EXPECT_THROW(conic_singular(Poly::zero(Grading::plane(2))), ZeroConic);
  EXPECT_THROW(conic_singular(parse_poly("x0")), GradingMismatch);
}

TEST(Conics, ParametersRequireANonsingularConic) {
  SchwarzParams good(3, parse_poly("x0^2 + x1^2 + x2^2"));
  EXPECT_TRUE(good.has_nonsingular_conic());
  EXPECT_NO_THROW(good.require_nonsingular());
  SchwarzParams bad(3, parse_poly("x0*x1"));
  EXPECT_THROW(bad.require_nonsingular(), SingularConic);
  EXPECT_THROW(SchwarzParams(3).require_nonsingular(), DomainError);
}

TEST(ChernCoverage, Examples) {
  auto c3 = chern_coverage(3);
  EXPECT_EQ(c3.c1, 0);
  EXPECT_EQ(c3.c2, 2);
  EXPECT_EQ(c3.family_index, 2);
  auto c4 = chern_coverage(4);
  EXPECT_EQ(c4.c1, -1);
  EXPECT_EQ(c4.c2, 4);
  EXPECT_EQ(c4.family_index, 2);
  auto c0 = chern_coverage(0);
  EXPECT_EQ(c0.c1, -1);
  EXPECT_EQ(c0.c2, 0);
}

TEST(ChernCoverage, ClosedFormsAndMonotonicity) {
  std::set<long> odd, even;
  long prev_odd = -1, prev_even = -1;
  for (long k = 0; k <= 30; ++k) {
    auto c = chern_coverage(k);
    EXPECT_EQ(chern_twist(schwarz_chern(k).first, c.twist), (ChernData{2, c.c1, c.c2}));
    long j = k / 2;
    if (k % 2) {
      EXPECT_EQ(c.c1, 0);
      EXPECT_EQ(c.c2, j * (j + 1));
      EXPECT_GT(c.c2, prev_odd);
      prev_odd = c.c2;
      EXPECT_TRUE(odd.insert(c.c2).second);
    } else {
      EXPECT_EQ(c.c1, -1);
      EXPECT_EQ(c.c2, j * j);
      EXPECT_GT(c.c2, prev_even);
      prev_even = c.c2;
      EXPECT_TRUE(even.insert(c.c2).second);
    }
  }
}
