#include <gtest/gtest.h>

#include <set>
#include <string>

#include "hfib/identities.hpp"

using hfib::Identity;
using hfib::ParamPoint;
using hfib::Rational;
using hfib::RangeOverrides;
using hfib::Scale;

TEST(Registry, KeysAndAnchors) {
  const std::set<std::string> expected{
      "BG-H1",  "BG-H2",  "BG-H3",  "BG-SP1", "BG-SP2", "BG-HH1", "BG-HH2", "BG-HHC",
      "BG-HSTIR", "FH-T21", "FH-T22", "FH-T23", "FH-T24", "FH-T25", "FH-C26", "FH-T27",
      "FH-T28", "HH-L32", "HH-T33", "HH-C34", "HH-T35", "HH-T35M"};
  std::set<std::string> seen;
  std::string previous;
  for (const Identity& id : hfib::registry()) {
    EXPECT_FALSE(id.anchor.empty()) << id.id;
    EXPECT_FALSE(id.description.empty()) << id.id;
    EXPECT_FALSE(id.params.empty()) << id.id;
    EXPECT_LT(previous, id.id);  // sorted, unique
    previous = id.id;
    seen.insert(id.id);
  }
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(hfib::registry().size(), 22u);
}

TEST(Registry, UnknownId) {
  EXPECT_THROW(hfib::find_identity("NOPE"), hfib::VerificationError);
  EXPECT_THROW(hfib::verify("NOPE"), hfib::VerificationError);
}

TEST(Registry, OverridesAreValidated) {
  try {
    hfib::verify("FH-T23", {{"m", {-1, 2}}});
    FAIL() << "expected a precondition error";
  } catch (const hfib::VerificationError& e) {
    EXPECT_NE(std::string(e.what()).find("m >= 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(hfib::verify("FH-T21", {{"q", {1, 2}}}), hfib::VerificationError);
  EXPECT_THROW(hfib::verify("FH-T21", {{"n", {5, 2}}}), hfib::VerificationError);
  EXPECT_THROW(hfib::verify("HH-T35", {{"r", {0, 2}}}), hfib::VerificationError);
}

TEST(Registry, ScaleParsing) {
  EXPECT_EQ(hfib::parse_scale("small"), Scale::Small);
  EXPECT_EQ(hfib::parse_scale("large"), Scale::Large);
  EXPECT_FALSE(hfib::parse_scale("huge").has_value());
  EXPECT_EQ(hfib::to_string(Scale::Default), "default");
  EXPECT_EQ(hfib::scale_index_limit(Scale::Small), 20);
  EXPECT_EQ(hfib::scale_index_limit(Scale::Default), 100);
  EXPECT_EQ(hfib::scale_index_limit(Scale::Large), 300);
}

TEST(Grid, OverrideRangesAndSizes) {
  auto r = hfib::verify("FH-T21", {{"n", {1, 2}}});
  EXPECT_EQ(r.grid_size, 2u);
  EXPECT_TRUE(r.passed());

  r = hfib::verify("FH-T27", {{"n", {1, 50}}});
  EXPECT_EQ(r.grid_size, 50u);
  EXPECT_TRUE(r.passed());

  r = hfib::verify("BG-SP2", {{"n", {1, 1}}});
  EXPECT_EQ(r.grid_size, 1u);
  EXPECT_TRUE(r.passed());

  const auto grid = hfib::build_grid(hfib::find_identity("FH-T23"), Scale::Small);
  EXPECT_EQ(grid.size(), 20u * 7u);
  EXPECT_EQ(grid.front().str(), "n=1, m=0");
  EXPECT_EQ(grid.back().str(), "n=20, m=6");
}

TEST(Grid, CoupledParamsStayBelowIndex) {
  const auto grid = hfib::build_grid(hfib::find_identity("HH-T33"), Scale::Small,
                                     {{"i", {1, 40}}, {"j", {1, 40}}});
  std::size_t expected = 0;
  for (int n = 1; n <= 20; ++n) expected += static_cast<std::size_t>(n) * n;
  EXPECT_EQ(grid.size(), expected);
  for (const ParamPoint& p : grid) {
    ASSERT_LE(p["i"], p["n"]);
    ASSERT_LE(p["j"], p["n"]);
  }
}

TEST(Verify, CorruptedSideIsReported) {
  Identity broken = hfib::find_identity("FH-T27");
  auto original = broken.rhs;
  broken.rhs = [original](const ParamPoint& p) {
    Rational v = original(p);
    if (p["n"] == 7) v += Rational(hfib::BigInt(1), hfib::BigInt(1000));
    return v;
  };
  const auto report = hfib::verify(broken, Scale::Small);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].params["n"], 7);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.failures[0].lhs, report.failures[0].rhs);
}

TEST(Verify, AllPassAtSmallScale) {
  const auto reports = hfib::verify_all(Scale::Small);
  ASSERT_EQ(reports.size(), hfib::registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].id, hfib::registry()[i].id);
    EXPECT_GT(reports[i].grid_size, 0u) << reports[i].id;
    EXPECT_TRUE(reports[i].passed()) << reports[i].id;
  }
}

TEST(Verify, JsonShape) {
  Identity broken = hfib::find_identity("BG-H1");
  broken.lhs = [](const ParamPoint&) { return Rational(-1); };
  const auto j = hfib::to_json(hfib::verify(broken, Scale::Small, {{"n", {2, 3}}}));
  EXPECT_EQ(j["id"], "BG-H1");
  EXPECT_EQ(j["grid_size"], 2);
  ASSERT_TRUE(j["failures"].is_array());
  ASSERT_EQ(j["failures"].size(), 2u);
  EXPECT_EQ(j["failures"][0]["params"]["n"], 2);
  EXPECT_EQ(j["failures"][0]["lhs"], "-1");
  EXPECT_TRUE(j["failures"][0]["rhs"].is_string());
  EXPECT_TRUE(j["elapsed_ms"].is_number());
}
