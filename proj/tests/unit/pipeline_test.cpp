#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/pipeline.hpp"
#include "oracles.hpp"

namespace hm = hypermatch;
using hm::Rational;

namespace {

std::uint32_t default_r(std::uint32_t n, std::uint32_t k, std::uint32_t m) {
  return k + (n - k * m + k - 2) / (k - 1);
}

// Checks the returned witnesses without trusting the pipeline's own checks.
void expect_verified(const hm::KGraph& h, std::uint32_t m, std::uint32_t r, const hm::PipelineResult& res) {
  const auto n1 = h.n() + r;
  const auto hr = hm::join_clique(h, r);
  ASSERT_EQ(res.h_prime.n(), n1);
  // H' contains the relabelled H_r^k
  const auto relabelled = hm::apply_order(hr, res.order);
  for (const auto& e : relabelled.edges()) EXPECT_TRUE(res.h_prime.contains(e));
  EXPECT_TRUE(oracle::feasible(res.h_prime, {res.phi.weights.begin(), res.phi.weights.end()}));
  EXPECT_EQ(res.phi.value(), hm::ratio(n1, h.k()));
  for (hm::Vertex v = 1; v <= n1; ++v) EXPECT_EQ(res.phi.load(v), 1);
  EXPECT_EQ(res.value, hm::ratio(n1, h.k()));
  EXPECT_EQ(res.lp_value, hm::max_fractional_matching(hr).value);
  EXPECT_EQ(res.value, res.lp_value);
  EXPECT_EQ(res.matching.size(), m);
  EXPECT_TRUE(hm::verify_matching(res.h_prime, res.matching));
  EXPECT_TRUE(hm::verify_matching(res.h_prime, res.completion));
}

}  // namespace

TEST(Augmentation, SizesAndRounding) {
  const auto h = oracle::random_graph(20, 3, 0.1, 1);
  const auto a = hm::build_augmented(h, 3, Rational(1, 10));
  // ceil(2) = 2, n - km - 2 = 9, r = ceil(9 / 2)
  EXPECT_EQ(a.eta_n, 2u);
  EXPECT_EQ(a.r, 5u);
  EXPECT_EQ(a.residual, 1u);
  EXPECT_EQ(a.graph, hm::join_clique(h, 5));
  const auto tight = hm::build_augmented(hm::KGraph(9, 3), 3, Rational(0));
  EXPECT_EQ(tight.r, 0u);
  EXPECT_EQ(tight.graph, hm::KGraph(9, 3));
  EXPECT_THROW(hm::build_augmented(hm::KGraph(9, 3), 3, Rational(1, 10)), hm::InfeasibleAugmentation);
  EXPECT_THROW(hm::build_augmented(hm::KGraph(9, 3), 3, Rational(-1, 10)), hm::ParameterError);
  // large eta: r(k-1) still covers the gap with slack at most 2 ceil(eta n)
  for (std::uint32_t n = 30; n <= 60; n += 7) {
    const auto b = hm::build_augmented(hm::KGraph(n, 3), 2, Rational(1, 5));
    EXPECT_GE(b.r * 2, n - 6 - b.eta_n);
    EXPECT_LE(b.residual, 1u);
  }
}

TEST(Config, Validation) {
  hm::PipelineConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.eta = 0;
  EXPECT_THROW(cfg.validate(), hm::ParameterError);
  cfg = {};
  cfg.eps = 1;
  EXPECT_THROW(cfg.validate(), hm::ParameterError);
  cfg = {};
  cfg.rho_prime = Rational(1, 100);
  EXPECT_THROW(cfg.validate(), hm::ParameterError);
  cfg = {};
  cfg.sampler.copy_exponent = 2;
  EXPECT_THROW(cfg.validate(), hm::ParameterError);
  EXPECT_EQ(hm::parse_route("exact"), hm::Route::exact);
  EXPECT_EQ(hm::parse_route("greedy"), hm::Route::greedy);
  EXPECT_EQ(hm::parse_route("auto"), hm::Route::automatic);
  EXPECT_THROW(hm::parse_route("other"), hm::ParameterError);
}

TEST(Hypotheses, CompleteGraph) {
  hm::PipelineConfig cfg;
  const auto h = hm::complete(12, 3);
  const auto ok = hm::check_hypotheses(h, 3, 5, cfg);
  EXPECT_EQ(ok.alpha, 2u);
  EXPECT_EQ(ok.alpha_bound, Rational(39, 5));
  EXPECT_TRUE(*ok.independence);
  EXPECT_EQ(ok.delta1, 55);
  // C(11,2) - C(9,2) - 144/100
  EXPECT_EQ(ok.degree_bound, Rational(439, 25));
  EXPECT_TRUE(ok.degree);
  EXPECT_TRUE(ok.r_condition);
  EXPECT_TRUE(ok.hold());
  EXPECT_FALSE(hm::check_hypotheses(h, 3, 4, cfg).r_condition);
  cfg.check_independence = false;
  const auto skipped = hm::check_hypotheses(h, 3, 5, cfg);
  EXPECT_FALSE(skipped.independence.has_value());
  EXPECT_FALSE(skipped.hold());
}

TEST(Hypotheses, ExtremalGraphFailsIndependence) {
  const auto h = hm::build_hknm(9, 3, 3).graph;
  const auto r = hm::check_hypotheses(h, 3, 3, {});
  EXPECT_EQ(r.alpha, 7u);
  EXPECT_FALSE(*r.independence);
  EXPECT_EQ(r.delta1, 13);
}

TEST(Pipeline, CompleteGraph) {
  hm::PipelineConfig cfg;
  const auto h = hm::complete(12, 3);
  const auto res = hm::fractional_pm_pipeline(h, 3, 1, cfg);
  EXPECT_EQ(res.value, Rational(13, 3));
  expect_verified(h, 3, 1, res);
}

TEST(Pipeline, RandomDenseInstancesBothRoutes) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const std::uint32_t n = 12 + static_cast<std::uint32_t>(seed);
    const auto h = hm::random_kgraph(n, 3, 0.6, seed);
    const auto r = default_r(n, 3, 3);
    for (auto route : {hm::Route::exact, hm::Route::greedy}) {
      hm::PipelineConfig cfg;
      cfg.route = route;
      cfg.seed = seed;
      // the greedy route needs a block of at least k vertices beyond W
      cfg.eps = Rational(1, 4);
      const auto res = hm::fractional_pm_pipeline(h, 3, r, cfg);
      ASSERT_TRUE(res.hypotheses.hold()) << "seed " << seed;
      EXPECT_EQ(res.route_used, hm::to_string(route));
      expect_verified(h, 3, r, res);
      for (const auto& step : res.trace.steps) EXPECT_EQ(step.status, "ok") << step.name;
    }
  }
}

TEST(Pipeline, GreedyRouteNeedsRoomInTheBlock) {
  const auto h = hm::random_kgraph(12, 3, 0.6, 0);
  hm::PipelineConfig cfg;
  cfg.route = hm::Route::greedy;
  // floor(n / 10) = 1 leaves S_1 with two vertices
  try {
    hm::fractional_pm_pipeline(h, 3, 5, cfg);
    FAIL() << "expected a step failure";
  } catch (const hm::StepFailure& e) {
    EXPECT_EQ(e.step(), "matching");
    EXPECT_NE(e.trace().find("S_1 cannot hold"), std::string::npos);
  }
  cfg.route = hm::Route::automatic;
  expect_verified(h, 3, 5, hm::fractional_pm_pipeline(h, 3, 5, cfg));
}

TEST(Pipeline, PlantedDenseBlock) {
  // H_3(20, 3) plus every 3-set inside the first six U vertices
  auto base = hm::build_hknm(20, 3, 3).graph.edges();
  for (const auto& e : oracle::all_subsets(6, 3)) base.push_back({e[0] + 2, e[1] + 2, e[2] + 2});
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  const hm::KGraph h(20, 3, base);
  const auto r = default_r(20, 3, 3);
  const auto res = hm::fractional_pm_pipeline(h, 3, r, {});
  EXPECT_EQ(res.matching.size(), 3u);
  expect_verified(h, 3, r, res);
}

TEST(Pipeline, TraceSerialisation) {
  const auto res = hm::fractional_pm_pipeline(hm::complete(12, 3), 3, 5, {});
  const auto timed = res.trace.to_json(true);
  const auto plain = res.trace.to_json(false);
  EXPECT_NE(timed.find("millis"), std::string::npos);
  EXPECT_EQ(plain.find("millis"), std::string::npos);
  for (const char* name : {"hypotheses", "cover", "closure", "structure", "matching", "completion", "assemble"})
    EXPECT_NE(plain.find(name), std::string::npos) << name;
  EXPECT_EQ(plain, hm::fractional_pm_pipeline(hm::complete(12, 3), 3, 5, {}).trace.to_json(false));
}

TEST(Pipeline, RejectsBadArguments) {
  EXPECT_THROW(hm::fractional_pm_pipeline(hm::complete(8, 2), 2, 2, {}), hm::ParameterError);
  EXPECT_THROW(hm::fractional_pm_pipeline(hm::complete(8, 3), 3, 2, {}), hm::ParameterError);
  EXPECT_THROW(hm::fractional_pm_pipeline(hm::complete(8, 3), 0, 2, {}), hm::ParameterError);
}
