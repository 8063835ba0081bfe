#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/kgraph.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;

namespace {

hm::KGraph fano_like() {
  return hm::KGraph(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

}  // namespace

TEST(KGraph, CanonicalisesEdges) {
  const hm::KGraph h(5, 3, {{3, 1, 2}, {5, 4, 1}});
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge_copy(0), (hm::Edge{1, 2, 3}));
  EXPECT_EQ(h.edge_copy(1), (hm::Edge{1, 4, 5}));
  EXPECT_TRUE(h.contains(std::vector<hm::Vertex>{1, 4, 5}));
  EXPECT_FALSE(h.contains(std::vector<hm::Vertex>{1, 2, 4}));
}

TEST(KGraph, RejectsMalformedEdges) {
  EXPECT_THROW(hm::KGraph(5, 3, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(hm::KGraph(5, 3, {{1, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(hm::KGraph(5, 3, {{1, 2, 6}}), std::invalid_argument);
  EXPECT_THROW(hm::KGraph(5, 3, {{0, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(hm::KGraph(5, 3, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
}

TEST(KGraph, RankIsLexicographicPosition) {
  const auto all = oracle::all_subsets(7, 3);
  const hm::KGraph h(7, 3);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(h.rank_of(all[i]), i);
}

TEST(KGraph, DegreesMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = oracle::random_graph(8, 3, 0.4, seed);
    for (std::uint32_t l = 1; l <= 2; ++l) {
      EXPECT_EQ(hm::min_l_degree(h, l), oracle::min_l_degree(h, l));
      EXPECT_EQ(hm::max_l_degree(h, l), oracle::max_l_degree(h, l));
    }
    const auto d = h.vertex_degrees();
    for (hm::Vertex v = 1; v <= 8; ++v) EXPECT_EQ(d[v - 1], oracle::degree(h, {v}));
    for (const auto& t : oracle::all_subsets(8, 2)) EXPECT_EQ(hm::degree(h, t), oracle::degree(h, t));
  }
}

TEST(KGraph, DegreeQueriesOutOfRange) {
  const auto h = fano_like();
  EXPECT_THROW(hm::degree(h, std::vector<hm::Vertex>{1, 2, 3, 4}), hm::InvalidQuery);
  EXPECT_THROW(hm::min_l_degree(h, 3), hm::InvalidQuery);
  EXPECT_THROW(hm::max_l_degree(h, 3), hm::InvalidQuery);
  EXPECT_EQ(hm::degree(h, std::vector<hm::Vertex>{1, 2, 3}), 1u);
}

TEST(KGraph, FanoPlaneDegrees) {
  const auto h = fano_like();
  EXPECT_EQ(hm::min_l_degree(h, 1), 3u);
  EXPECT_EQ(hm::max_l_degree(h, 2), 1u);
  EXPECT_EQ(hm::min_l_degree(h, 2), 1u);
}

TEST(KGraph, LinkShiftsLabels) {
  const hm::KGraph h(5, 3, {{1, 2, 3}, {2, 3, 5}, {1, 4, 5}});
  const auto l = hm::link(h, 3);
  EXPECT_EQ(l.n(), 4u);
  EXPECT_EQ(l.k(), 2u);
  EXPECT_EQ(l.edges(), (std::vector<hm::Edge>{{1, 2}, {2, 4}}));
  EXPECT_THROW(hm::link(h, 6), hm::InvalidQuery);
}

TEST(KGraph, InducedAndRemove) {
  const auto h = fano_like();
  const std::vector<hm::Vertex> s{1, 2, 3, 4, 5};
  const auto sub = hm::induced(h, s);
  EXPECT_EQ(sub.graph.edges(), (std::vector<hm::Edge>{{1, 2, 3}, {1, 4, 5}}));
  EXPECT_EQ(sub.original, s);
  const auto rest = hm::remove(h, std::vector<hm::Vertex>{1});
  EXPECT_EQ(rest.graph.n(), 6u);
  EXPECT_EQ(rest.graph.num_edges(), 4u);
  EXPECT_EQ(rest.original, (std::vector<hm::Vertex>{2, 3, 4, 5, 6, 7}));
}

TEST(KGraph, IndependenceNumberMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = oracle::random_graph(10, 3, 0.15 + 0.03 * static_cast<double>(seed % 10), seed);
    const auto is = hm::max_independent_set(h);
    EXPECT_EQ(is.size, oracle::alpha(h)) << "seed " << seed;
    ASSERT_EQ(is.vertices.size(), is.size);
    for (const auto& e : h.edges())
      EXPECT_FALSE(std::includes(is.vertices.begin(), is.vertices.end(), e.begin(), e.end()));
  }
  EXPECT_EQ(hm::independence_number(hm::KGraph(6, 3)), 6u);
  EXPECT_EQ(hm::independence_number(hm::complete(6, 3)), 2u);
}

TEST(KGraph, StabilityMatchesFullDominanceOrder) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = oracle::random_graph(7, 3, 0.3, seed);
    EXPECT_EQ(hm::is_stable(h), oracle::is_stable(h));
    const auto c = hm::stable_closure(h);
    EXPECT_TRUE(oracle::is_stable(c));
    for (const auto& e : h.edges()) EXPECT_TRUE(c.contains(e));
    // minimal: each closure edge lies below some original edge
    for (const auto& f : c.edges()) {
      const auto orig = h.edges();
      EXPECT_TRUE(std::any_of(orig.begin(), orig.end(), [&](const hm::Edge& e) { return oracle::dominated(f, e); }));
    }
  }
  EXPECT_TRUE(hm::is_stable(hm::build_hknm(9, 3, 3).graph));
}

TEST(KGraph, VerifyMatching) {
  const auto h = fano_like();
  hm::Matching ok;
  ok.edges = {{1, 2, 3}};
  EXPECT_TRUE(hm::verify_matching(h, ok));
  hm::Matching overlap;
  overlap.edges = {{1, 2, 3}, {1, 4, 5}};
  EXPECT_FALSE(hm::verify_matching(h, overlap));
  hm::Matching foreign;
  foreign.edges = {{1, 2, 4}};
  EXPECT_FALSE(hm::verify_matching(h, foreign));
}

TEST(KGraph, ContentHashTracksEdges) {
  const auto a = fano_like();
  const auto b = fano_like();
  EXPECT_EQ(a.content_hash(), b.content_hash());
  const hm::KGraph c(7, 3, {{1, 2, 3}});
  EXPECT_NE(a.content_hash(), c.content_hash());
}

TEST(KGraph, ComplementList) {
  EXPECT_EQ(hm::complement(6, std::vector<hm::Vertex>{2, 5}), (std::vector<hm::Vertex>{1, 3, 4, 6}));
}
