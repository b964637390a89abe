#include <gtest/gtest.h>

#include "cohiggs/report.hpp"
#include "cohiggs/verify.hpp"

using namespace cohiggs;

TEST(Report, ChecksCompareComputedWithExpected) {
  EXPECT_TRUE(make_check("a", "claim", "route", 3, 3).pass);
  auto bad = make_check("b", "claim", "route", nlohmann::json::array({1, 2}), nlohmann::json::array({1, 3}));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.to_json()["status"], "fail");
}

TEST(Report, ChecksAreKeptSortedById) {
  VerificationReport r(9);
  r.add(make_check("c", "", "", 1, 1));
  r.add(std::vector<Check>{make_check("a", "", "", 1, 2), make_check("b", "", "", 1, 1)});
  ASSERT_EQ(r.checks().size(), 3u);
  EXPECT_EQ(r.checks()[0].id, "a");
  EXPECT_EQ(r.checks()[2].id, "c");
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.failing_ids(), std::vector<std::string>{"a"});
  auto j = r.to_json();
  EXPECT_EQ(j["version"], VerificationReport::kVersion);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_NE(r.to_markdown().find("2 of 3 checks pass"), std::string::npos);
}

TEST(Verify, TangentProfiles) {
  EXPECT_EQ(tangent_profile(0).h, (std::array<long, 3>{8, 0, 0}));
  EXPECT_EQ(tangent_profile(-1).h, (std::array<long, 3>{3, 0, 0}));
  EXPECT_EQ(tangent_profile(-2).h, (std::array<long, 3>{0, 0, 0}));
  EXPECT_EQ(tangent_profile(-3).h, (std::array<long, 3>{0, 1, 0}));
  EXPECT_EQ(end0_tangent_profile(0).h, (std::array<long, 3>{0, 0, 0}));
  EXPECT_EQ(end0_tangent_profile(1).h, (std::array<long, 3>{6, 0, 0}));
  EXPECT_EQ(end0_tangent_profile(2).h, (std::array<long, 3>{15, 0, 0}));
}

TEST(Verify, TwelveNumberedCriteria) {
  const auto& cs = acceptance_criteria();
  ASSERT_EQ(cs.size(), 12u);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_EQ(cs[i].number, static_cast<int>(i + 1));
    EXPECT_GT(cs[i].time_limit, 0);
    EXPECT_NE(cs[i].run, nullptr);
  }
}

TEST(Verify, FullReportPassesAndIsSeedIndependent) {
  auto a = verify_all(3);
  auto b = verify_all(4);
  EXPECT_TRUE(a.all_pass()) << a.to_markdown();
  EXPECT_EQ(a.verdicts(), b.verdicts());
  EXPECT_EQ(a.to_json()["version"], 1);
}
