#include <gtest/gtest.h>

#include <random>

#include "trigva/cli/suite.hpp"
#include "trigva/errors.hpp"

using namespace trigva;
using namespace trigva::cli;

namespace {

Record random_record(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Record r;
  r.check_id = "suite" + std::to_string(pick(0, 3)) + ".case" + std::to_string(pick(0, 99));
  r.paper_anchor = pick(0, 1) ? "anchor with \"quotes\" and \\ slash" : "plain";
  int np = pick(0, 4);
  for (int i = 0; i < np; ++i) {
    std::string key = "k" + std::to_string(i);
    if (pick(0, 1))
      r.params.emplace_back(key, static_cast<long>(pick(-1000, 1000)));
    else
      r.params.emplace_back(key, std::string("v") + std::to_string(pick(0, 9)));
  }
  r.status = static_cast<Status>(pick(0, 2));
  if (r.status != Status::Pass) r.witness = "w" + std::to_string(pick(0, 50));
  r.elapsed_ms = pick(0, 5000);
  return r;
}

SuiteConfig small_iso() {
  SuiteConfig c;
  c.box = 1;
  c.timing = false;
  return c;
}

}  // namespace

TEST(Report, EmptyJsonIsEmptyArray) { EXPECT_EQ(emit_report({}, Format::Json), "[]"); }

TEST(Report, PassRecordHasNullWitness) {
  Record r;
  r.check_id = "x.y";
  r.paper_anchor = "a";
  std::string s = emit_report({r}, Format::Json);
  EXPECT_NE(s.find("\"witness\": null"), std::string::npos);
  EXPECT_LT(s.find("check_id"), s.find("paper_anchor"));
  EXPECT_LT(s.find("witness"), s.find("elapsed_ms"));
}

TEST(Report, RoundTripRandom) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 50; ++trial) {
    Report rep;
    int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < n; ++i) rep.push_back(random_record(rng));
    EXPECT_EQ(parse_report_json(emit_report(rep, Format::Json)), rep);
  }
}

TEST(Report, MarkdownGroupsBySuite) {
  Record a, b;
  a.check_id = "iso.A";
  b.check_id = "iso.B";
  b.status = Status::Fail;
  b.witness = "bad";
  std::string md = emit_report({a, b}, Format::Markdown);
  EXPECT_NE(md.find("iso"), std::string::npos);
  EXPECT_NE(md.find("1/2"), std::string::npos);
  EXPECT_NE(md.find("bad"), std::string::npos);
}

TEST(Report, ParseRejectsNonArray) { EXPECT_THROW(parse_report_json("{}"), UsageError); }

TEST(Config, ValidateRejects) {
  SuiteConfig c;
  c.box = 0;
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.interval = {3, 1};
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.levels = {0};
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.q_specs = {mpq_class(2)};
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.q_specs = {mpq_class(2), mpq_class(1)};
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.perturb = {"no-such-fault"};
  EXPECT_THROW(c.validate(), UsageError);
  c = {};
  c.trunc = {4, 8, 2};
  EXPECT_THROW(c.validate(), UsageError);
  EXPECT_THROW(run_suite(SuiteConfig{}, "nope"), UsageError);
}

TEST(Config, EveryFaultTargetsAKnownSuite) {
  for (const auto& [f, s] : fault_names())
    EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), s), suite_names().end()) << f;
}

TEST(Suite, IsoPassesAndIsDeterministic) {
  auto c = small_iso();
  Report a = run_suite(c, "iso"), b = run_suite(c, "iso");
  ASSERT_FALSE(a.empty());
  for (const auto& r : a) EXPECT_EQ(r.status, Status::Pass) << r.check_id << ": " << r.witness.value_or("");
  EXPECT_EQ(emit_report(a, Format::Json), emit_report(b, Format::Json));
}

TEST(Suite, IsoCharacterFaultGivesWitness) {
  auto c = small_iso();
  c.perturb = {"iso-character"};
  Report r = run_suite(c, "iso");
  for (const auto& rec : r) {
    EXPECT_EQ(rec.status, Status::Fail) << rec.check_id;
    ASSERT_TRUE(rec.witness.has_value());
    EXPECT_NE(rec.witness->find("(alpha,m,beta,n)="), std::string::npos);
  }
}

TEST(Suite, WeightsPassAndFault) {
  SuiteConfig c;
  c.timing = false;
  for (const auto& r : run_suite(c, "weights")) EXPECT_EQ(r.status, Status::Pass) << r.check_id;
  c.perturb = {"weight-unit"};
  for (const auto& r : run_suite(c, "weights")) EXPECT_EQ(r.status, Status::Fail) << r.check_id;
}
