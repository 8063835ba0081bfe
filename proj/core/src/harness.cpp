#include "hypermatch/harness.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/graph_io.hpp"
#include "hypermatch/matching.hpp"

namespace hypermatch {
namespace {

using Clock = std::chrono::steady_clock;

// Shortest text that reads back to the same double.
std::string number_text(double x) { return nlohmann::json(x).dump(); }

BigInt delta1_of(const KGraph& h) {
  if (h.n() == 0 || h.k() < 2) return 0;
  return BigInt(static_cast<unsigned long>(min_l_degree(h, 1)));
}

// Recomputed from the degree sequence, independently of the l-degree table.
BigInt delta1_from_degrees(const KGraph& h) {
  if (h.n() == 0) return 0;
  const auto d = h.vertex_degrees();
  return BigInt(static_cast<unsigned long>(*std::min_element(d.begin(), d.end())));
}

std::string describe(const std::string& label, std::uint32_t n, std::uint32_t k, std::uint32_t m, const KGraph& h) {
  return label + " n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + "\n" +
         serialize(h);
}

InstanceRecord check_extremal(const std::string& label, std::uint32_t n, std::uint32_t k, std::uint32_t m,
                              std::uint32_t m_graph, std::uint64_t index, bool timings) {
  const auto start = Clock::now();
  const auto g = build_hknm(n, k, m_graph).graph;
  InstanceRecord r;
  r.index = index;
  r.label = label;
  r.n = n;
  r.k = k;
  r.m = m;
  r.edges = g.num_edges();
  r.delta1 = delta1_of(g);
  r.threshold = vertex_degree_threshold(n, k, m);
  r.passed_filter = r.delta1 > r.threshold;
  r.hash = g.content_hash();
  const auto res = exact_nu(g);
  r.nu = res.nu;
  r.complete = res.complete;
  r.verified = true;
  if (timings) r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  if (!res.complete) throw AssertionFailure(label + ": exact search ran out of budget", describe(label, n, k, m, g));
  if (m_graph == m) {
    if (r.delta1 != r.threshold)
      throw AssertionFailure(label + ": delta_1 = " + to_string(r.delta1) + " differs from the threshold " +
                                 to_string(r.threshold),
                             describe(label, n, k, m, g));
    if (res.nu + 1 != m)
      throw AssertionFailure(label + ": nu = " + std::to_string(res.nu) + " but m - 1 = " + std::to_string(m - 1),
                             describe(label, n, k, m, g));
  } else {
    if (!(r.delta1 > r.threshold))
      throw AssertionFailure(label + ": delta_1 does not exceed the threshold", describe(label, n, k, m, g));
    if (res.nu != m)
      throw AssertionFailure(label + ": nu = " + std::to_string(res.nu) + " but m = " + std::to_string(m),
                             describe(label, n, k, m, g));
  }
  return r;
}

}  // namespace

std::vector<GridPoint> tightness_grid(const std::vector<std::uint32_t>& ks, std::uint32_t n_max) {
  std::vector<GridPoint> grid;
  for (auto k : ks)
    for (std::uint32_t n = k; n <= n_max; ++n)
      for (std::uint32_t m = 1; m <= n / k; ++m)
        if (k + m - 1 <= n) grid.push_back({n, k, m});
  return grid;
}

ExperimentReport verify_tightness(const std::vector<GridPoint>& grid, bool timings) {
  ExperimentReport rep;
  rep.experiment = "tightness";
  rep.version = version();
  rep.parameters.emplace_back("points", std::to_string(grid.size()));
  std::uint64_t index = 0;
  for (const auto& p : grid) {
    if (p.k < 2 || p.m < 1 || std::uint64_t{p.k} * p.m > p.n)
      throw ParameterError("grid point outside 1 <= m <= n/k, k >= 2");
    rep.records.push_back(check_extremal("H_k(n,m)", p.n, p.k, p.m, p.m, index++, timings));
    if (p.m + p.k <= p.n) rep.records.push_back(check_extremal("H_k(n,m+1)", p.n, p.k, p.m, p.m + 1, index++, timings));
  }
  return rep;
}

const char* to_string(SearchModel model) {
  switch (model) {
    case SearchModel::uniform: return "uniform-p";
    case SearchModel::conditioned: return "conditioned";
    case SearchModel::planted: return "planted";
  }
  return "?";
}

SearchModel parse_search_model(const std::string& text) {
  if (text == "uniform" || text == "uniform-p") return SearchModel::uniform;
  if (text == "conditioned") return SearchModel::conditioned;
  if (text == "planted") return SearchModel::planted;
  throw ParameterError("unknown model: " + text);
}

bool passes_degree_filter(const KGraph& h, std::uint32_t m) {
  return delta1_of(h) > vertex_degree_threshold(h.n(), h.k(), m);
}

ExperimentReport conjecture_search(const SearchConfig& cfg) {
  if (cfg.k < 2) throw ParameterError("k must be at least 2");
  if (cfg.m < 1 || std::uint64_t{cfg.k} * cfg.m >= cfg.n) throw ParameterError("need 1 <= m < n/k");
  if (cfg.n > 256) throw ParameterError("exact matching supports n <= 256");

  ExperimentReport rep;
  rep.experiment = "conjecture-search";
  rep.version = version();
  rep.seed = cfg.seed;
  auto& ps = rep.parameters;
  ps.emplace_back("n", std::to_string(cfg.n));
  ps.emplace_back("k", std::to_string(cfg.k));
  ps.emplace_back("m", std::to_string(cfg.m));
  ps.emplace_back("model", to_string(cfg.model));
  ps.emplace_back("trials", std::to_string(cfg.trials));
  switch (cfg.model) {
    case SearchModel::uniform: ps.emplace_back("p", number_text(cfg.p)); break;
    case SearchModel::conditioned: ps.emplace_back("tries", std::to_string(cfg.tries)); break;
    case SearchModel::planted:
      ps.emplace_back("keep", number_text(cfg.keep));
      ps.emplace_back("extra", number_text(cfg.extra));
      break;
  }
  ps.emplace_back("node_budget", std::to_string(cfg.node_budget));

  const BigInt threshold = vertex_degree_threshold(cfg.n, cfg.k, cfg.m);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const auto start = Clock::now();
    InstanceRecord r;
    r.index = i;
    r.n = cfg.n;
    r.k = cfg.k;
    r.m = cfg.m;
    r.seed = derive_seed(cfg.seed, i);
    r.threshold = threshold;
    r.label = to_string(cfg.model);

    std::optional<KGraph> sample;
    switch (cfg.model) {
      case SearchModel::uniform: sample = random_kgraph(cfg.n, cfg.k, cfg.p, r.seed); break;
      case SearchModel::conditioned: {
        auto s = random_kgraph_conditioned(cfg.n, cfg.k, cfg.m, std::nullopt, cfg.tries, r.seed);
        if (s.exhausted()) r.label = "conditioned-exhausted";
        sample = std::move(s.graph);
        break;
      }
      case SearchModel::planted:
        sample = random_planted(cfg.n, cfg.k, cfg.m, cfg.keep, cfg.extra, r.seed);
        break;
    }

    if (sample) {
      const KGraph& h = *sample;
      r.edges = h.num_edges();
      r.hash = h.content_hash();
      r.delta1 = delta1_of(h);
      r.passed_filter = r.delta1 > threshold;
      if (r.passed_filter) {
        const auto hash_again = h.content_hash();
        const auto delta_again = delta1_from_degrees(h);
        r.verified = hash_again == r.hash && delta_again == r.delta1;
        if (!r.verified)
          throw InternalContradiction("search", "instance " + std::to_string(i) + " changed between filter and nu");
        const auto res = exact_nu(h, {cfg.node_budget, false});
        r.nu = res.nu;
        r.complete = res.complete;
        if (!res.complete) {
          rep.complete = false;
        } else if (res.nu < cfg.m) {
          const auto again = exact_nu(h, {cfg.node_budget, true});
          if (again.complete && again.nu == res.nu && delta1_from_degrees(h) > threshold) {
            r.counterexample = true;
            rep.counterexamples.push_back({i, serialize(h)});
          } else if (again.complete) {
            throw InternalContradiction("search", "two exact searches disagree on instance " + std::to_string(i));
          } else {
            r.complete = false;
            rep.complete = false;
          }
        }
      }
    }
    if (cfg.timings) r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

CaseSplitReport case_split_demo(const KGraph& h, std::uint32_t m, const PipelineConfig& cfg) {
  CaseSplitReport out;
  out.containment = eps_contains(h, m, cfg.eps);
  out.contains = out.containment.satisfied;
  const auto n = h.n();
  const auto k = h.k();

  if (out.contains) {
    std::vector<char> in_w(n + 1, 0);
    for (auto v : out.containment.partition.w) in_w[v] = 1;
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      const auto e = h.edge(i);
      const auto c = static_cast<std::uint32_t>(std::count_if(e.begin(), e.end(), [&](Vertex v) { return in_w[v] != 0; }));
      if (c >= 1 && c + 1 <= k) flat.insert(flat.end(), e.begin(), e.end());
    }
    out.template_nu = exact_nu(KGraph::from_flat(n, k, std::move(flat)), {cfg.node_budget, false}).nu;
    const auto res = exact_nu(h, {cfg.node_budget, false});
    out.nu = res.nu;
    out.concluded = res.complete && res.nu >= m;
    return out;
  }

  Augmentation aug;
  try {
    aug = build_augmented(h, m, cfg.eta);
  } catch (const InfeasibleAugmentation& e) {
    out.pipeline_error = std::string("augmentation: ") + e.what();
    return out;
  }
  out.r = aug.r;
  out.hypotheses = check_hypotheses(h, m, aug.r, cfg);
  try {
    const auto res = fractional_pm_pipeline(h, m, aug.r, cfg);
    out.pipeline_ok = true;
    out.pipeline_value = res.value;
  } catch (const StepFailure& e) {
    out.pipeline_error = "pipeline/" + e.step() + ": " + e.what();
  } catch (const ParameterError& e) {
    out.pipeline_error = std::string("pipeline: ") + e.what();
  }

  const auto an = exact_nu(aug.graph, {cfg.node_budget, false});
  out.augmented_nu = an.nu;
  std::uint64_t inside = 0;
  for (const auto& e : an.matching.edges)
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return v <= n; })) ++inside;
  out.extracted = inside;
  if (an.nu >= std::uint64_t{m} + aug.r) {
    // at most r edges of the matching can meet Q
    if (inside < m) throw InternalContradiction("strip", "a matching of size m + r keeps fewer than m edges of H");
    out.concluded = true;
  }
  return out;
}

}  // namespace hypermatch
