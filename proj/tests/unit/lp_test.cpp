#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/lp.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;
using hm::Rational;

namespace {

std::vector<std::pair<hm::Edge, Rational>> as_list(const hm::FractionalAssignment& phi) {
  return {phi.weights.begin(), phi.weights.end()};
}

bool cover_from_scratch(const hm::KGraph& h, const hm::VertexWeights& w) {
  for (const auto& x : w.w)
    if (x < 0 || x > 1) return false;
  for (const auto& e : h.edges()) {
    Rational s = 0;
    for (auto v : e) s += w.w[v - 1];
    if (s < 1) return false;
  }
  return true;
}

hm::KGraph fano() {
  return hm::KGraph(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

}  // namespace

TEST(FractionalMatching, CompleteGraph) {
  const auto r = hm::max_fractional_matching(hm::complete(5, 3));
  EXPECT_EQ(r.value, Rational(5, 3));
  const auto c = hm::min_fractional_cover(hm::complete(5, 3));
  EXPECT_EQ(c.value, Rational(5, 3));
  for (const auto& x : c.w.w) EXPECT_EQ(x, Rational(1, 3));
}

TEST(FractionalMatching, KnownValues) {
  EXPECT_EQ(hm::max_fractional_matching(fano()).value, Rational(7, 3));
  // W = {1, 2} is a cover of weight 2 and H_3(9, 3) has a matching of size 2
  EXPECT_EQ(hm::max_fractional_matching(hm::build_hknm(9, 3, 3).graph).value, 2);
  EXPECT_EQ(hm::max_fractional_matching(hm::KGraph(6, 3)).value, 0);
  EXPECT_EQ(hm::min_fractional_cover(hm::KGraph(6, 3)).value, 0);
}

TEST(FractionalMatching, WitnessesVerifiedIndependently) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto h = oracle::random_graph(8, 3, 0.25, seed);
    const auto m = hm::max_fractional_matching(h);
    const auto c = hm::min_fractional_cover(h);
    EXPECT_TRUE(oracle::feasible(h, as_list(m.phi)));
    EXPECT_EQ(m.phi.value(), m.value);
    EXPECT_TRUE(cover_from_scratch(h, c.w));
    EXPECT_TRUE(cover_from_scratch(h, m.certificate));
    EXPECT_EQ(m.certificate.total(), m.value);
    EXPECT_EQ(c.w.total(), c.value);
    EXPECT_EQ(m.value, c.value) << "seed " << seed;
    EXPECT_GE(m.value, Rational(static_cast<long>(oracle::nu(h))));
    EXPECT_LE(m.value, Rational(8, 3));
    EXPECT_TRUE(hm::check_duality(h));
  }
}

TEST(FractionalMatching, Predicates) {
  const auto h = hm::complete(6, 3);
  hm::FractionalAssignment phi{6, 3, {}};
  phi.weights[{1, 2, 3}] = 1;
  phi.weights[{4, 5, 6}] = 1;
  EXPECT_TRUE(hm::is_fractional_matching(h, phi));
  EXPECT_TRUE(hm::is_perfect_fractional_matching(h, phi));
  phi.weights[{1, 4, 5}] = Rational(1, 2);
  EXPECT_FALSE(hm::is_fractional_matching(h, phi));
  hm::FractionalAssignment outside{6, 3, {}};
  outside.weights[{1, 2, 3}] = Rational(1, 2);
  EXPECT_FALSE(hm::is_fractional_matching(hm::KGraph(6, 3, {{1, 2, 4}}), outside));
  hm::FractionalAssignment half{6, 3, {}};
  half.weights[{1, 2, 3}] = Rational(1, 2);
  half.prune();
  EXPECT_TRUE(hm::is_fractional_matching(h, half));
  EXPECT_FALSE(hm::is_perfect_fractional_matching(h, half));
  EXPECT_EQ(half.load(1), Rational(1, 2));
  EXPECT_EQ(half.load(4), 0);

  hm::VertexWeights w{{1, 0, 0, 0, 0, 0}};
  EXPECT_FALSE(hm::is_fractional_cover(h, w));
  EXPECT_TRUE(hm::is_fractional_cover(hm::KGraph(6, 3, {{1, 2, 3}}), w));
}

TEST(CliqueWindow, PerfectOnClique) {
  const auto phi = hm::clique_window_matching(12, 4);
  EXPECT_EQ(phi.value(), 3);
  EXPECT_TRUE(hm::is_perfect_fractional_matching(hm::complete(12, 4), phi));
  for (const auto& l : phi.loads()) EXPECT_EQ(l, 1);
  const auto small = hm::clique_window_matching(4, 3);
  EXPECT_TRUE(hm::is_perfect_fractional_matching(hm::complete(4, 3), small));
  EXPECT_EQ(small.value(), Rational(4, 3));
}

TEST(WeightClosure, MatchesEnumeration) {
  hm::VertexWeights w{{1, 1, 0, 0, 0}};
  const auto c = hm::weight_closure(5, 3, w);
  EXPECT_EQ(c.num_edges(), 9u);
  EXPECT_EQ(c.edges(), oracle::weight_closure(5, 3, w.w));
  hm::VertexWeights thirds{{Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 6), 0, 0, 0}};
  EXPECT_EQ(hm::weight_closure(7, 3, thirds).edges(), oracle::weight_closure(7, 3, thirds.w));
  // the closure of a fractional cover contains the graph
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = oracle::random_graph(7, 3, 0.3, seed);
    const auto cl = hm::weight_closure(7, 3, hm::min_fractional_cover(h).w);
    for (const auto& e : h.edges()) EXPECT_TRUE(cl.contains(e));
  }
}

TEST(Relabel, OrdersByWeight) {
  hm::VertexWeights w{{0, Rational(1, 2), 1, Rational(1, 2)}};
  EXPECT_EQ(hm::weight_order(w, 4), (std::vector<hm::Vertex>{3, 2, 4, 1}));
  EXPECT_EQ(hm::weight_order(w, 2), (std::vector<hm::Vertex>{2, 1, 3, 4}));
  const hm::KGraph h(4, 2, {{1, 3}, {2, 4}});
  const auto r = hm::relabel_by_weights(h, w);
  EXPECT_EQ(r.order, (std::vector<hm::Vertex>{3, 2, 4, 1}));
  EXPECT_EQ(r.weights.w, (std::vector<Rational>{1, Rational(1, 2), Rational(1, 2), 0}));
  // old 1 -> new 4, old 3 -> new 1, old 2 -> new 2, old 4 -> new 3
  EXPECT_EQ(r.graph.edges(), (std::vector<hm::Edge>{{1, 4}, {2, 3}}));
  EXPECT_EQ(hm::apply_order(h, r.order), r.graph);
  const auto p = hm::relabel_prefix_by_weights(h, w, 2);
  EXPECT_EQ(p.order, (std::vector<hm::Vertex>{2, 1, 3, 4}));
}

TEST(Relabel, ClosureOfOrderedCoverIsStable) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = oracle::random_graph(7, 3, 0.35, seed);
    const auto r = hm::relabel_by_weights(h, hm::min_fractional_cover(h).w);
    EXPECT_TRUE(oracle::is_stable(hm::weight_closure(7, 3, r.weights)));
  }
}
