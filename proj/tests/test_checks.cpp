#include <gtest/gtest.h>

#include "dendro/checks.hpp"
#include "dendro/json.hpp"

using namespace dendro;

namespace {

const std::vector<std::string> kAll = {"identities", "factorization", "signs",  "orders",   "moore",
                                       "split",      "counit",        "unit",   "relations"};

}  // namespace

TEST(Checks, WorkedExamplesReproduce) {
  const Report r = worked_examples();
  EXPECT_EQ(r.size(), 15U);
  for (const auto& c : r) EXPECT_TRUE(c.passed) << c.relation << ": " << c.instance;
}

TEST(Checks, ParallelMapKeepsOrder) {
  const auto out = parallel_map(1000, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_TRUE(parallel_map(0, 3, [](std::size_t i) { return i; }).empty());
}

TEST(Checks, ReportIsByteIdenticalAcrossParallelism) {
  SweepConfig one{3, 5, kAll, 1, 7, false};
  SweepConfig many = one;
  many.parallel = 4;
  const auto tr = std::make_shared<const Truncation>(3, 5);
  const std::string a = sweep_report(one, run_sweep(one, tr)).dump(2);
  const std::string b = sweep_report(many, run_sweep(many, tr)).dump(2);
  EXPECT_EQ(a, b);
  SweepConfig reseeded = one;
  reseeded.seed = 8;
  EXPECT_NE(a, sweep_report(reseeded, run_sweep(reseeded, tr)).dump(2));
}

TEST(Checks, SignFaultIsDetected) {
  const auto tr = std::make_shared<const Truncation>(2, 4);
  const SuiteResult clean = suite_moore(tr, 1, false);
  const SuiteResult faulty = suite_moore(tr, 1, true);
  EXPECT_GT(faulty.failures.size(), clean.failures.size());
  bool at_clean_tree = false;
  for (const auto& f : faulty.failures) at_clean_tree = at_clean_tree || !maximality_ambiguous(parse_tree(f.tree));
  EXPECT_TRUE(at_clean_tree);
}

TEST(Checks, SuitesPassOnASmallTruncation) {
  const auto tr = std::make_shared<const Truncation>(2, 4);
  for (const auto& s : {suite_identities(tr, 1), suite_factorization(tr, 1), suite_signs(tr, 1), suite_relations(tr, 2, 3)}) {
    EXPECT_TRUE(s.passed()) << s.name;
    EXPECT_GT(s.instances, 0U) << s.name;
  }
}

TEST(Checks, OrderFailuresAllComeFromRootFaceShifts) {
  const auto tr = std::make_shared<const Truncation>(3, 5);
  const SuiteResult r = suite_orders(tr, 1);
  const auto it = r.tallies.find("failures_otherwise");
  EXPECT_TRUE(it == r.tallies.end() || it->second == 0);
  EXPECT_EQ(r.tallies.at("degeneracy_relations") > 0, true);
}

TEST(Checks, BadConfigurations) {
  EXPECT_THROW(run_sweep(SweepConfig{1, 2, {}, 1, 7, false}), std::invalid_argument);
  EXPECT_THROW(run_sweep(SweepConfig{1, 2, {"nope"}, 1, 7, false}), std::invalid_argument);
}

TEST(Json, MapRoundTripAndRejection) {
  const Generator d = inner_face(parse_tree("((e e) e)"), EdgeAddr{{0}});
  const Json j = to_json(d.map);
  EXPECT_EQ(omega_map_from_json(j), d.map);
  Json missing = j;
  missing["edge_map"].erase(missing["edge_map"].begin());
  EXPECT_THROW((void)omega_map_from_json(missing), std::invalid_argument);
  Json twice = j;
  twice["edge_map"].push_back(twice["edge_map"][0]);
  EXPECT_THROW((void)omega_map_from_json(twice), std::invalid_argument);
  Json bad = Json::parse(R"j({"domain":"(e e)","codomain":"(e e)","edge_map":[[[],[]],[[0],[1]],[[1],[0]]]})j");
  try {
    (void)omega_map_from_json(bad);
    FAIL();
  } catch (const InvalidMap& e) {
    EXPECT_EQ(e.vertex(), std::optional<std::size_t>(0));
  }
}

TEST(Json, LargeEntriesBecomeStrings) {
  IntMatrix m(1, 2);
  m(0, 0) = 5;
  m(0, 1) = Integer::parse("123456789012345678901234567890");
  const Json j = to_json(m);
  EXPECT_EQ(j["rows"], 1);
  EXPECT_EQ(j["cols"], 2);
  EXPECT_EQ(j["entries"][0][0], 5);
  EXPECT_EQ(j["entries"][0][1], "123456789012345678901234567890");
  const Json empty = to_json(IntMatrix(3, 0));
  EXPECT_EQ(empty["cols"], 0);
  EXPECT_EQ(empty["entries"].size(), 3U);
}
