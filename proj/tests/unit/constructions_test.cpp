#include <gtest/gtest.h>

#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/diagnostics.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/matching.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;

namespace {

// Captures warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture() {
    previous_ = hm::set_warning_sink([this](std::string_view m) { messages.emplace_back(m); });
  }
  ~WarningCapture() { hm::set_warning_sink(previous_); }
  std::vector<std::string> messages;

 private:
  hm::WarningSink previous_;
};

std::uint64_t count_meeting(std::uint32_t n, std::uint32_t k, const std::vector<hm::Vertex>& w, std::uint32_t lo,
                            std::uint32_t hi) {
  std::vector<char> in_w(n + 1, 0);
  for (auto v : w) in_w[v] = 1;
  std::uint64_t c = 0;
  for (const auto& e : oracle::all_subsets(n, k)) {
    const auto t = oracle::meet(e, in_w);
    c += (t >= lo && t <= hi) ? 1 : 0;
  }
  return c;
}

}  // namespace

TEST(Hkl, EdgeCountMatchesEnumeration) {
  const auto p = hm::VertexPartition::from_w(9, {1, 2});
  const auto h = hm::build_hkl(p, 3, 2);
  EXPECT_EQ(h.num_edges(), count_meeting(9, 3, {1, 2}, 1, 2));
  EXPECT_EQ(h.num_edges(), 49u);
  for (std::uint32_t l = 1; l <= 3; ++l) {
    const auto q = hm::VertexPartition::from_w(8, {2, 5, 7});
    EXPECT_EQ(hm::build_hkl(q, 3, l).num_edges(), count_meeting(8, 3, {2, 5, 7}, 1, l));
  }
}

TEST(Hkl, DegenerateParts) {
  EXPECT_TRUE(hm::build_hkl(hm::VertexPartition::from_w(6, {}), 3, 2).empty());
  const auto all_w = hm::build_hkl(hm::VertexPartition::from_w(3, {1, 2, 3}), 3, 3);
  EXPECT_EQ(all_w.num_edges(), 1u);
  EXPECT_THROW(hm::build_hkl(hm::VertexPartition::from_w(6, {1}), 3, 0), hm::ParameterError);
}

TEST(Partition, Validation) {
  hm::VertexPartition bad{{1, 2}, {2, 3}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  const auto p = hm::VertexPartition::from_w(5, {4, 2});
  EXPECT_EQ(p.u, (std::vector<hm::Vertex>{1, 3, 5}));
  EXPECT_EQ(p.w, (std::vector<hm::Vertex>{2, 4}));
}

TEST(Extremal, DegreesAndMatchingNumber) {
  const auto h93 = hm::build_hknm(9, 3, 3);
  EXPECT_EQ(hm::min_l_degree(h93.graph, 1), 13u);
  EXPECT_EQ(hm::max_l_degree(h93.graph, 2), 7u);
  EXPECT_EQ(hm::degree(h93.graph, std::vector<hm::Vertex>{9}), 13u);
  EXPECT_EQ(hm::degree(h93.graph, std::vector<hm::Vertex>{1}), 28u);
  EXPECT_EQ(hm::degree(h93.graph, std::vector<hm::Vertex>{}), h93.graph.num_edges());
  EXPECT_EQ(oracle::nu(h93.graph), 2u);
  EXPECT_EQ(hm::independence_number(h93.graph), 7u);
  EXPECT_TRUE(hm::induced(h93.graph, h93.partition.u).graph.empty());
  EXPECT_EQ(hm::link(h93.graph, 9).num_edges(), 13u);

  const auto h72 = hm::build_hknm(7, 3, 2);
  EXPECT_EQ(hm::min_l_degree(h72.graph, 1), 5u);
  EXPECT_EQ(oracle::nu(h72.graph), 1u);

  EXPECT_TRUE(hm::build_hknm(8, 3, 1).graph.empty());
}

TEST(Thresholds, ClosedForms) {
  EXPECT_EQ(hm::vertex_degree_threshold(9, 3, 3), 13);
  EXPECT_EQ(hm::vertex_degree_threshold(9, 3, 2), 7);
  EXPECT_EQ(hm::vertex_degree_threshold(10, 4, 1), 0);
  // max{C(8,3), C(9,3) - C(7,3)} + 1 = max{56, 49} + 1
  EXPECT_EQ(hm::erdos_threshold(9, 3, 3), 57);
  // max{C(5,3), C(9,3) - C(8,3)} + 1 = max{10, 28} + 1
  EXPECT_EQ(hm::erdos_threshold(9, 3, 2), 29);
  EXPECT_THROW(hm::erdos_threshold(8, 3, 3), hm::ParameterError);
}

TEST(Thresholds, ConjecturedFraction) {
  EXPECT_EQ(hm::l_degree_conjectured_fraction(3, 1), hm::Rational(5, 9));
  EXPECT_EQ(hm::l_degree_conjectured_fraction(3, 2), hm::Rational(1, 2));
  EXPECT_EQ(hm::l_degree_conjectured_fraction(4, 1), hm::Rational(37, 64));
  EXPECT_THROW(hm::l_degree_conjectured_fraction(3, 3), hm::ParameterError);
}

TEST(Thresholds, BetaBoundWarning) {
  const hm::BigInt base = 27 * 2 * 243 * 6;
  hm::BigInt fourth = base * base * base * base;
  EXPECT_EQ(hm::beta_upper_bound(3), hm::Rational(hm::BigInt(1), fourth));
  WarningCapture capture;
  const auto spec = hm::ThresholdSpec::make(9, 3, 3, hm::Rational(1, 10));
  EXPECT_EQ(spec.vertex_degree_threshold, 13);
  EXPECT_EQ(spec.erdos_threshold, 57);
  EXPECT_EQ(capture.messages.size(), 1u);
  hm::ThresholdSpec::make(9, 3, 3, hm::Rational(1, 10) * hm::beta_upper_bound(3));
  EXPECT_EQ(capture.messages.size(), 1u);
}

TEST(JoinClique, CountsAndDegrees) {
  const auto j = hm::join_clique(hm::KGraph(4, 3), 2);
  EXPECT_EQ(j.num_edges(), 16u);
  const auto h = oracle::random_graph(7, 3, 0.4, 9);
  const auto hr = hm::join_clique(h, 3);
  EXPECT_EQ(hm::BigInt(static_cast<unsigned long>(hr.num_edges())),
            hm::binomial(10, 3) - hm::binomial(7, 3) + static_cast<unsigned long>(h.num_edges()));
  for (hm::Vertex q = 8; q <= 10; ++q)
    EXPECT_EQ(hm::BigInt(static_cast<unsigned long>(hm::degree(hr, std::vector<hm::Vertex>{q}))), hm::binomial(9, 2));
  // each original vertex gains C(n+r-1, k-1) - C(n-1, k-1)
  for (hm::Vertex v = 1; v <= 7; ++v) {
    const auto before = hm::degree(h, std::vector<hm::Vertex>{v});
    const auto after = hm::degree(hr, std::vector<hm::Vertex>{v});
    EXPECT_EQ(hm::BigInt(static_cast<unsigned long>(after - before)), hm::binomial(9, 2) - hm::binomial(6, 2));
  }
  EXPECT_EQ(hm::join_clique(h, 0), h);
}

TEST(Barriers, ParityConstruction) {
  const auto p = hm::parity_construction(3, 3, 3);
  EXPECT_EQ(p.num_edges(), 10u);
  EXPECT_EQ(oracle::nu(p), 1u);
  WarningCapture capture;
  EXPECT_EQ(hm::parity_construction(1, 2, 3).num_edges(), 0u);
  EXPECT_TRUE(capture.messages.empty());
  hm::parity_construction(2, 5, 3);
  EXPECT_EQ(capture.messages.size(), 1u);
  EXPECT_THROW(hm::parity_construction(1, 1, 3), hm::ParameterError);
}

TEST(Barriers, SpaceBarrier) {
  const auto s = hm::space_barrier(6, 3);
  EXPECT_EQ(s.num_edges(), 10u);
  EXPECT_EQ(oracle::nu(s), 1u);
  for (std::uint32_t n : {9u, 12u}) EXPECT_LT(hm::exact_nu(hm::space_barrier(n, 3)).nu, n / 3);
  EXPECT_LT(hm::exact_nu(hm::space_barrier(8, 4)).nu, 2u);
  EXPECT_THROW(hm::space_barrier(7, 3), hm::ParameterError);
}

TEST(Random, ExtremesAndDeterminism) {
  EXPECT_TRUE(hm::random_kgraph(8, 3, 0.0, 1).empty());
  EXPECT_EQ(hm::random_kgraph(8, 3, 1.0, 1), hm::complete(8, 3));
  EXPECT_EQ(hm::random_kgraph(12, 3, 0.3, 77), hm::random_kgraph(12, 3, 0.3, 77));
  EXPECT_NE(hm::random_kgraph(12, 3, 0.3, 77), hm::random_kgraph(12, 3, 0.3, 78));
  EXPECT_EQ(hm::random_kgraph(40, 3, 0.01, 5), hm::random_kgraph(40, 3, 0.01, 5));
  EXPECT_THROW(hm::random_kgraph(8, 3, 1.5, 1), hm::ParameterError);
}

TEST(Random, DensityIsPlausible) {
  // C(30,3) = 4060 trials; 6 standard deviations at p = 0.05 is about 83
  const auto sparse = hm::random_kgraph(30, 3, 0.05, 3);
  EXPECT_NEAR(static_cast<double>(sparse.num_edges()), 203.0, 83.0);
  const auto dense = hm::random_kgraph(30, 3, 0.5, 3);
  EXPECT_NEAR(static_cast<double>(dense.num_edges()), 2030.0, 200.0);
}

TEST(Random, ConditionedRespectsFloor) {
  const auto s = hm::random_kgraph_conditioned(9, 3, 2, std::nullopt, 1000, 4);
  ASSERT_FALSE(s.exhausted());
  EXPECT_GT(hm::min_l_degree(*s.graph, 1), 7u);
  const auto never = hm::random_kgraph_conditioned(9, 3, 2, hm::BigInt(29), 5, 4);
  EXPECT_TRUE(never.exhausted());
  EXPECT_EQ(never.tries_used, 0u);
}

TEST(Random, PlantedModel) {
  const auto exact = hm::random_planted(9, 3, 3, 1.0, 0.0, 2);
  EXPECT_EQ(exact, hm::build_hknm(9, 3, 3).graph);
  const auto noisy = hm::random_planted(9, 3, 3, 0.9, 0.1, 2);
  EXPECT_EQ(noisy, hm::random_planted(9, 3, 3, 0.9, 0.1, 2));
}

TEST(Complete, Basics) {
  const auto k5 = hm::complete(5, 3);
  EXPECT_EQ(k5.num_edges(), 10u);
  EXPECT_EQ(hm::degree(k5, std::vector<hm::Vertex>{1}), 6u);
  EXPECT_EQ(hm::max_l_degree(hm::complete(6, 3), 2), 4u);
  EXPECT_EQ(hm::link(hm::complete(4, 3), 4), hm::complete(3, 2));
  EXPECT_EQ(hm::remove(hm::complete(6, 3), std::vector<hm::Vertex>{1}).graph, hm::complete(5, 3));
  EXPECT_EQ(hm::independence_number(hm::complete(7, 4)), 3u);
  EXPECT_TRUE(hm::is_stable(hm::complete(7, 3)));
  EXPECT_FALSE(hm::is_stable(hm::KGraph(4, 3, {{2, 3, 4}})));
  EXPECT_TRUE(hm::is_stable(hm::build_hkl(hm::VertexPartition::from_w(9, {1, 2}), 3, 3)));
}
