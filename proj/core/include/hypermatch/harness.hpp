#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/containment.hpp"
#include "hypermatch/kgraph.hpp"
#include "hypermatch/pipeline.hpp"
#include "hypermatch/report.hpp"

namespace hypermatch {

/// An exact check in the harness failed. Carries the offending instance.
class AssertionFailure : public std::runtime_error {
 public:
  AssertionFailure(const std::string& what, std::string instance)
      : std::runtime_error(what), instance_(std::move(instance)) {}
  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string instance_;
};

struct GridPoint {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
};

/// Every (n, k, m) with k in ks, k + m - 1 <= n <= n_max and 1 <= m <= n/k.
std::vector<GridPoint> tightness_grid(const std::vector<std::uint32_t>& ks, std::uint32_t n_max);

/// For each point: delta_1(H_k(n, m)) equals the threshold and nu = m - 1;
/// when m + k <= n also delta_1(H_k(n, m+1)) exceeds it and nu = m. Throws
/// AssertionFailure on the first mismatch.
ExperimentReport verify_tightness(const std::vector<GridPoint>& grid, bool timings = false);

enum class SearchModel { uniform, conditioned, planted };

const char* to_string(SearchModel model);
SearchModel parse_search_model(const std::string& text);

struct SearchConfig {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  SearchModel model = SearchModel::conditioned;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Edge probability of the uniform model.
  double p = 0.5;
  /// Rejection cap per conditioned trial.
  std::uint64_t tries = 1000;
  /// Planted model: survival of template edges and density of the rest.
  double keep = 0.95;
  double extra = 0.05;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool timings = false;
};

/// Strict filter delta_1(H) > C(n-1, k-1) - C(n-m, k-1).
bool passes_degree_filter(const KGraph& h, std::uint32_t m);

/// Samples graphs, keeps those passing the degree filter, computes nu
/// exactly and records every nu < m as a counterexample after re-checking
/// it from scratch. Instances over budget are recorded as incomplete.
ExperimentReport conjecture_search(const SearchConfig& cfg);

struct CaseSplitReport {
  ContainmentReport containment;
  bool contains = false;
  /// Contains branch: nu of H restricted to template edges, and nu(H).
  std::optional<std::uint64_t> template_nu;
  std::optional<std::uint64_t> nu;
  /// Non-contains branch.
  std::optional<std::uint32_t> r;
  std::optional<PipelineHypotheses> hypotheses;
  bool pipeline_ok = false;
  std::string pipeline_error;
  std::optional<Rational> pipeline_value;
  std::optional<std::uint64_t> augmented_nu;
  /// Edges of a maximum matching of H_r^k lying inside H.
  std::optional<std::uint64_t> extracted;
  /// nu(H) >= m was established.
  bool concluded = false;
};

/// Runs eps_contains and follows the branch it selects.
CaseSplitReport case_split_demo(const KGraph& h, std::uint32_t m, const PipelineConfig& cfg);

}  // namespace hypermatch
