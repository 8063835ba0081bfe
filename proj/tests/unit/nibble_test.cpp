#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/matching.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;
using hm::Rational;

TEST(Nibble, ProducesMatchingOnClique) {
  hm::NibbleConfig cfg;
  cfg.seed = 4;
  const auto h = hm::complete(30, 3);
  const auto r = hm::nibble_matching(h, cfg);
  EXPECT_TRUE(hm::verify_matching(h, r.matching));
  EXPECT_EQ(r.covered_fraction, hm::ratio(static_cast<unsigned long>(3 * r.matching.size()), 30));
  // greedy cleanup on a clique always leaves fewer than k vertices
  EXPECT_EQ(r.matching.size(), 10u);
  EXPECT_TRUE(r.sigma_met);
  EXPECT_FALSE(r.rounds.empty());
  EXPECT_TRUE(r.gate.degrees_within_slack);
}

TEST(Nibble, DeterministicForSeed) {
  hm::NibbleConfig cfg;
  cfg.seed = 9;
  const auto h = hm::random_kgraph(40, 3, 0.1, 2);
  const auto a = hm::nibble_matching(h, cfg);
  const auto b = hm::nibble_matching(h, cfg);
  EXPECT_EQ(a.matching.edges, b.matching.edges);
  EXPECT_TRUE(hm::verify_matching(h, a.matching));
}

TEST(Nibble, ConfigValidation) {
  hm::NibbleConfig cfg;
  cfg.bite_fraction = 1.0;
  EXPECT_THROW(cfg.validate(), hm::ParameterError);
  cfg = {};
  cfg.sigma_target = 0.0;
  EXPECT_THROW(hm::nibble_matching(hm::complete(6, 3), cfg), hm::ParameterError);
}

TEST(Nibble, GateReportsIrregularity) {
  const auto g = hm::regularity_gate(hm::build_hknm(12, 3, 3).graph, 0.1, 0.0);
  EXPECT_FALSE(g.degrees_within_slack);
  EXPECT_FALSE(g.passes());
  const auto c = hm::regularity_gate(hm::complete(9, 3), 0.1, 1000.0);
  EXPECT_TRUE(c.degrees_within_slack);
  EXPECT_FALSE(c.degree_above_floor);
}

TEST(Sparsify, KeepsOnlyCopyEdges) {
  const auto h = hm::complete(12, 3);
  std::vector<hm::FractionalCopy> copies;
  for (hm::Vertex base : {0u, 6u}) {
    hm::FractionalCopy c;
    for (hm::Vertex v = 1; v <= 6; ++v) c.vertices.push_back(base + v);
    c.phi = {12, 3, {}};
    c.phi.weights[{base + 1, base + 2, base + 3}] = 1;
    c.phi.weights[{base + 4, base + 5, base + 6}] = 1;
    copies.push_back(c);
  }
  const auto r = hm::sparsify_by_fractional(h, copies, 1);
  EXPECT_EQ(r.graph.edges(), (std::vector<hm::Edge>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}));
  EXPECT_EQ(r.max_degree, 1u);
  EXPECT_EQ(r.min_degree, 1u);
}

TEST(Sparsify, RejectsBadCopies) {
  const auto h = hm::complete(9, 3);
  hm::FractionalCopy a;
  a.vertices = {1, 2, 3, 4, 5, 6};
  a.phi = {9, 3, {}};
  a.phi.weights[{1, 2, 3}] = 1;
  EXPECT_THROW(hm::sparsify_by_fractional(h, {a}, 0), hm::PreconditionError);
  a.phi.weights[{4, 5, 6}] = 1;
  hm::FractionalCopy b;
  b.vertices = {4, 5, 6, 7, 8, 9};
  b.phi = {9, 3, {}};
  b.phi.weights[{4, 5, 6}] = 1;
  b.phi.weights[{7, 8, 9}] = 1;
  EXPECT_THROW(hm::sparsify_by_fractional(h, {a, b}, 0), hm::PreconditionError);
}

TEST(Sparsify, EdgeFrequencyFollowsWeights) {
  const auto h = hm::complete(5, 3);
  hm::FractionalCopy c;
  c.vertices = {1, 2, 3, 4, 5};
  c.phi = hm::clique_window_matching(5, 3);
  int kept = 0;
  const int trials = 3000;
  for (int s = 0; s < trials; ++s) kept += hm::sparsify_by_fractional(h, {c}, s).graph.contains(std::vector<hm::Vertex>{1, 2, 3}) ? 1 : 0;
  // Bin(3000, 1/3): 6 standard deviations is about 155
  EXPECT_NEAR(kept, trials / 3.0, 155);
}
