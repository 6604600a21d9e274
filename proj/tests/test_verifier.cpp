#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

CorpusSpec small_corpus() {
  std::istringstream in(
      "Z6\nZ12\nZ2 x Z2\nZ4\ntriv(Z2, free(1))\namalg(Z4, Z4, id, (2))\n"
      "Z ; ideal=(3) ; mcs=units\nZ x Z ; ideal=(0,2) ; mcs=(units,all)\n"
      "Z x Z ; ideal=(0,2) ; mcs=({1},{1})\n"
      "Z3[x] ; ideal=kernel(1,(0)) ; mcs=1,2\nZ2[x]\n");
  return parse_corpus(in);
}

std::string dump(const std::vector<ReportRecord>& recs) {
  std::ostringstream os;
  write_json_lines(os, recs);
  return os.str();
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int rc = ringlab::cli::run(args, o, e);
  if (out) *out = o.str() + e.str();
  return rc;
}

}  // namespace

TEST(Registry, CoversEveryId) {
  const std::vector<std::string> want{"T2.3", "T2.5", "P2.6",  "T2.7",   "P2.8",    "P2.10",  "T2.11", "T2.12",
                                      "C-zd", "P-jac", "P-zero", "P-colon", "P-annsum", "P-minidem", "P-sidem", "P-suz",
                                      "P-suzmax", "L3.1", "P3.2", "P3.3", "T4.1", "T4.2", "DM", "DEGEN"};
  std::vector<std::string> got;
  for (const auto& t : theorem_registry()) got.push_back(t.id);
  EXPECT_EQ(got, want);
  for (const auto& t : theorem_registry()) EXPECT_NE(t.scope, 0U) << t.id;
}

TEST(Registry, UnknownIds) {
  try {
    find_theorem("T9.9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
  }
  try {
    counterexample_search("T2.12", small_corpus(), {"no-such-hypothesis"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownHypothesis);
  }
}

TEST(Verify, SmallCorpusClean) {
  const auto recs = verify({}, small_corpus());
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) EXPECT_FALSE(r.unexpected_violation()) << r.to_json().dump();
}

TEST(Verify, DeterministicAcrossJobs) {
  const auto c = small_corpus();
  RunOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(dump(verify({}, c, one)), dump(verify({}, c, four)));
  EXPECT_EQ(dump(verify({}, c, one)), dump(verify({}, c, one)));
}

TEST(Verify, TheoremMajorOrder) {
  const auto recs = verify({"P-zero", "C-zd"}, small_corpus());
  // Each theorem's records form one contiguous block.
  std::vector<std::string> blocks;
  for (const auto& r : recs)
    if (blocks.empty() || blocks.back() != r.theorem) blocks.push_back(r.theorem);
  std::sort(blocks.begin(), blocks.end());
  EXPECT_EQ(blocks, (std::vector<std::string>{"C-zd", "P-zero"}));
}

TEST(Verify, PZeroVerifiedEverywhereInScope) {
  for (const auto& r : verify({"P-zero"}, small_corpus())) EXPECT_EQ(r.outcome, RecordOutcome::Verified) << r.entry;
}

TEST(Verify, DmHasThousandChecksPerRing) {
  const auto recs = verify({"DM"}, small_corpus());
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) {
    EXPECT_EQ(r.outcome, RecordOutcome::Verified);
    EXPECT_GE(r.verified, 1000U);
  }
}

TEST(Hunt, DropNothingEqualsVerify) {
  const auto c = small_corpus();
  for (const char* id : {"T2.12", "P2.10", "T4.1"})
    EXPECT_EQ(dump(counterexample_search(id, c, {})), dump(verify({id}, c))) << id;
}

TEST(Hunt, ViolationsAreExpected) {
  const auto recs = counterexample_search("T2.12", small_corpus(), {"prime"});
  std::size_t v = 0;
  for (const auto& r : recs) {
    if (r.outcome != RecordOutcome::Violation) continue;
    ++v;
    EXPECT_TRUE(r.expected);
    EXPECT_EQ(r.dropped, std::vector<std::string>{"prime"});
  }
  EXPECT_GT(v, 0U);
}

TEST(Hunt, DisjointnessDropOnZ12) {
  std::istringstream in("Z12\n");
  const auto recs = counterexample_search("T2.12", parse_corpus(in), {"disjoint"});
  std::size_t v = 0;
  for (const auto& r : recs) v += r.outcome == RecordOutcome::Violation && r.expected;
  EXPECT_GT(v, 0U);
}

TEST(Report, JsonFields) {
  const auto recs = verify({"T2.12"}, small_corpus());
  ASSERT_FALSE(recs.empty());
  const auto j = recs.front().to_json(true);
  for (const char* k : {"theorem", "entry", "recipe", "annotations", "hypotheses", "outcome", "expected", "checks",
                        "witness", "counterexample"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_FALSE(recs.front().to_json(false).contains("millis"));
}

TEST(Report, Tally) {
  std::vector<ReportRecord> recs(3);
  recs[0].theorem = recs[1].theorem = "A";
  recs[2].theorem = "B";
  recs[0].outcome = RecordOutcome::Verified;
  recs[1].outcome = RecordOutcome::Violation;
  recs[1].expected = true;
  const auto t = tally(recs);
  ASSERT_EQ(t.size(), 2U);
  EXPECT_EQ(t[0].verified, 1U);
  EXPECT_EQ(t[0].violations, 1U);
  EXPECT_EQ(t[0].expected, 1U);
  EXPECT_EQ(t[1].vacuous, 1U);
}

TEST(Replay, ViolationReproducesThroughClassify) {
  const auto recs = counterexample_search("T2.12", small_corpus(), {"prime"});
  for (const auto& r : recs) {
    if (r.outcome != RecordOutcome::Violation || r.entry.find("Z x Z") == std::string::npos) continue;
    // The arith record names its ideal and m.c.s.; classify must show the same S-r verdict.
    const std::string ideal = r.annotations.value("ideal", "");
    const std::string mcs = r.annotations.value("mcs", "");
    ASSERT_FALSE(ideal.empty());
    std::string out;
    std::string inner = ideal.substr(1, ideal.size() - 2);
    EXPECT_EQ(run_cli({"classify", "Z x Z", "--ideal", inner, "--mcs", mcs}, &out), 0);
    const bool srv = r.counterexample.value("S-r", false);
    EXPECT_NE(out.find(srv ? "S-r           yes" : "S-r           no"), std::string::npos) << out;
    return;
  }
  FAIL() << "no arith violation to replay";
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli({"ideals", "Z12"}, &out), 0);
  EXPECT_NE(out.find("6 ideals"), std::string::npos);
  EXPECT_EQ(run_cli({"ideals", "Z12x"}), 2);
  EXPECT_EQ(run_cli({"classify", "Z6", "--ideal", "2,,"}), 2);
  EXPECT_EQ(run_cli({"verify", "--theorems", "NOPE"}), 2);
  EXPECT_EQ(run_cli({"hunt", "P2.10", "--drop", "reduced"}), 0);
  EXPECT_EQ(run_cli({"frobnicate"}), 2);
}

TEST(Cli, PolyAndLocalize) {
  std::string out;
  EXPECT_EQ(run_cli({"poly", "Z3", "kernel", "1", "0", "--mcs", "1,2", "--degree", "3"}, &out), 0);
  EXPECT_NE(out.find("NO at degree 1, counterexample (x+2, 1)"), std::string::npos) << out;
  EXPECT_EQ(run_cli({"poly", "Z3", "sunit", "0,1"}, &out), 0);
  EXPECT_NE(out.find("analytic_no"), std::string::npos) << out;
  EXPECT_EQ(run_cli({"localize", "Z12", "--mcs", "3"}, &out), 0);
  EXPECT_NE(out.find("isomorphic"), std::string::npos) << out;
}
