#include <gtest/gtest.h>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/graph_io.hpp"
#include "hypermatch/harness.hpp"
#include "hypermatch/report.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;

TEST(Grid, EnumeratesAllPoints) {
  const auto g = hm::tightness_grid({3, 4}, 10);
  std::size_t expected = 0;
  for (std::uint32_t k : {3u, 4u})
    for (std::uint32_t n = 1; n <= 10; ++n)
      for (std::uint32_t m = 1; m * k <= n; ++m) expected += (k + m - 1 <= n) ? 1 : 0;
  EXPECT_EQ(g.size(), expected);
  for (const auto& p : g) {
    EXPECT_LE(p.k + p.m - 1, p.n);
    EXPECT_LE(p.m * p.k, p.n);
  }
}

TEST(Tightness, SmallGridPasses) {
  const auto report = hm::verify_tightness(hm::tightness_grid({3}, 10));
  EXPECT_TRUE(report.complete);
  EXPECT_TRUE(report.counterexamples.empty());
  bool saw = false;
  bool saw_next = false;
  for (const auto& r : report.records) {
    EXPECT_TRUE(r.complete);
    if (r.n == 9 && r.m == 3 && r.label == "H_k(n,m)") {
      saw = true;
      EXPECT_EQ(r.delta1, 13);
      EXPECT_EQ(r.threshold, 13);
      EXPECT_EQ(*r.nu, 2u);
      EXPECT_FALSE(r.passed_filter);
    }
    if (r.n == 9 && r.m == 3 && r.label == "H_k(n,m+1)") {
      saw_next = true;
      EXPECT_EQ(r.delta1, 18);
      EXPECT_TRUE(r.passed_filter);
      EXPECT_EQ(*r.nu, 3u);
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_TRUE(saw_next);
}

TEST(Tightness, RejectsBadGridPoint) {
  EXPECT_THROW(hm::verify_tightness({{6, 3, 3}}), hm::ParameterError);
}

TEST(Filter, StrictInequality) {
  EXPECT_FALSE(hm::passes_degree_filter(hm::build_hknm(9, 3, 2).graph, 2));
  EXPECT_TRUE(hm::passes_degree_filter(hm::build_hknm(9, 3, 3).graph, 2));
  EXPECT_TRUE(hm::passes_degree_filter(hm::complete(9, 3), 3));
}

TEST(Search, DeterministicAndConsistent) {
  hm::SearchConfig cfg;
  cfg.n = 9;
  cfg.k = 3;
  cfg.m = 2;
  cfg.trials = 40;
  cfg.seed = 5;
  const auto a = hm::conjecture_search(cfg);
  const auto b = hm::conjecture_search(cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(hm::render_report(a, hm::ReportFormat::records), hm::render_report(b, hm::ReportFormat::records));
  ASSERT_EQ(a.records.size(), 40u);
  for (const auto& r : a.records) {
    if (!r.passed_filter) continue;
    EXPECT_TRUE(r.verified);
    ASSERT_TRUE(r.nu.has_value());
    EXPECT_EQ(r.counterexample, *r.nu < 2);
  }
  // counterexamples are re-checked against the brute-force oracle here
  for (const auto& c : a.counterexamples) {
    const auto h = hm::parse_kgraph(c.graph);
    EXPECT_LT(oracle::nu(h), 2u);
    EXPECT_TRUE(hm::passes_degree_filter(h, 2));
  }
}

TEST(Search, UniformAndPlantedModels) {
  for (auto model : {hm::SearchModel::uniform, hm::SearchModel::planted}) {
    hm::SearchConfig cfg;
    cfg.n = 10;
    cfg.k = 3;
    cfg.m = 3;
    cfg.model = model;
    cfg.trials = 10;
    cfg.seed = 1;
    cfg.p = 0.7;
    const auto rep = hm::conjecture_search(cfg);
    EXPECT_EQ(rep.records.size(), 10u);
    for (const auto& r : rep.records) EXPECT_EQ(r.passed_filter, r.delta1 > r.threshold);
  }
  EXPECT_EQ(hm::parse_search_model(hm::to_string(hm::SearchModel::uniform)), hm::SearchModel::uniform);
  EXPECT_EQ(hm::parse_search_model("planted"), hm::SearchModel::planted);
  EXPECT_THROW(hm::parse_search_model("x"), hm::ParameterError);
}

TEST(Search, BudgetMarksIncomplete) {
  hm::SearchConfig cfg;
  cfg.n = 12;
  cfg.k = 3;
  cfg.m = 3;
  cfg.model = hm::SearchModel::uniform;
  cfg.p = 0.8;
  cfg.trials = 5;
  cfg.node_budget = 1;
  const auto rep = hm::conjecture_search(cfg);
  EXPECT_FALSE(rep.complete);
  EXPECT_GT(rep.indeterminate(), 0u);
  EXPECT_TRUE(rep.counterexamples.empty());
}

TEST(Search, RejectsBadConfig) {
  hm::SearchConfig cfg;
  cfg.n = 9;
  cfg.k = 3;
  cfg.m = 3;
  EXPECT_THROW(hm::conjecture_search(cfg), hm::ParameterError);
}

TEST(CaseSplit, ContainsBranch) {
  const auto r = hm::case_split_demo(hm::build_hknm(12, 3, 4).graph, 4, {});
  EXPECT_TRUE(r.contains);
  EXPECT_EQ(r.containment.deficiency, 0);
  ASSERT_TRUE(r.template_nu.has_value());
  EXPECT_EQ(*r.template_nu, 3u);
  EXPECT_EQ(*r.nu, 3u);
  EXPECT_FALSE(r.concluded);
}

TEST(CaseSplit, DenseGraphConcludes) {
  const auto r = hm::case_split_demo(hm::complete(12, 3), 3, {});
  EXPECT_TRUE(r.concluded);
  EXPECT_GE(*r.nu, 3u);
}

TEST(CaseSplit, EdgelessGraphDoesNotConclude) {
  const auto r = hm::case_split_demo(hm::KGraph(12, 3), 3, {});
  EXPECT_FALSE(r.concluded);
}
