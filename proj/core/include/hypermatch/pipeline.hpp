#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermatch/kgraph.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

struct SamplerConfig {
  /// Each vertex is kept with probability n^(-p_exponent).
  Rational p_exponent{9, 10};
  /// ceil(n^copy_exponent) copies are drawn.
  Rational copy_exponent{11, 10};
  /// Replaces n^(-p_exponent) when set.
  std::optional<Rational> keep_probability;
  /// Replaces ceil(n^copy_exponent) when set.
  std::optional<std::uint64_t> copies;
};

enum class Route { automatic, exact, greedy };

const char* to_string(Route route);
Route parse_route(const std::string& text);

struct PipelineConfig {
  /// Padding eta; the augmentation leaves ceil(eta n) vertices unabsorbed.
  Rational eta{1, 12};
  /// Degree slack: delta_1(H) may fall rho n^(k-1) short of the threshold.
  Rational rho{1, 100};
  /// Containment / complete-block parameter.
  Rational eps{1, 10};
  Rational beta{0};
  /// rho' used for the per-copy degree check of the sampler; 2 rho if unset.
  std::optional<Rational> rho_prime;
  SamplerConfig sampler;
  NibbleConfig nibble;
  std::uint64_t seed = 0;
  Route route = Route::automatic;
  /// Compute alpha(H) exactly; otherwise the hypothesis is skipped with a warning.
  bool check_independence = true;
  std::uint64_t node_budget = kDefaultNodeBudget;

  /// Throws ParameterError unless 0 < eta, 0 < eps < 1, 0 <= rho, beta >= 0
  /// and the exponents lie in (0, 1) and (1, 2).
  void validate() const;
};

struct Augmentation {
  KGraph graph;
  std::uint32_t r = 0;
  /// ceil(eta n).
  std::uint32_t eta_n = 0;
  /// r (k-1) - (n - km - ceil(eta n)), in [0, k-2].
  std::uint32_t residual = 0;
};

/// H_r^k with r = ceil((n - km - ceil(eta n)) / (k-1)). Throws
/// InfeasibleAugmentation when n - km - ceil(eta n) < 0. When ceil(eta n) >=
/// k(k-1) it checks (r-k)(k-1) >= n - km - 2 ceil(eta n).
Augmentation build_augmented(const KGraph& h, std::uint32_t m, const Rational& eta);

/// The conditions under which the pipeline is guaranteed to succeed, evaluated on H.
struct PipelineHypotheses {
  /// alpha(H), when computed.
  std::optional<std::uint64_t> alpha;
  /// n - m - eps n.
  Rational alpha_bound;
  /// alpha(H) < n - m - eps n; empty when not checked.
  std::optional<bool> independence;
  BigInt delta1;
  /// C(n-1, k-1) - C(n-m, k-1) - rho n^(k-1).
  Rational degree_bound;
  bool degree = false;
  /// (r - k)(k - 1) >= n - km.
  bool r_condition = false;
  /// n/(2k^4) < m <= (n-1)/(2(k-1)) + 1.
  bool m_range = false;
  /// 0 < eps <= 1/(3^(k-2) k! k^3) and 0 < rho < eps^4 / k^8.
  bool constants_in_range = false;

  /// Independence (checked and true), degree and r condition.
  bool hold() const { return independence.value_or(false) && degree && r_condition; }
};

PipelineHypotheses check_hypotheses(const KGraph& h, std::uint32_t m, std::uint32_t r,
                                    const PipelineConfig& cfg);

struct TraceStep {
  std::string name;
  /// "ok", "failed" or "skipped".
  std::string status;
  std::vector<std::pair<std::string, std::string>> details;
  double millis = 0;
};

struct PipelineTrace {
  std::vector<TraceStep> steps;
  /// One JSON object: {"steps": [...]}; timings included when asked.
  std::string to_json(bool timings = true) const;
};

struct PipelineResult {
  /// The weight closure H' in relabelled vertex names.
  KGraph h_prime;
  /// order[i] is the H_r^k label of vertex i+1 of H'.
  std::vector<Vertex> order;
  /// Minimum fractional cover of H_r^k, in H' labels.
  VertexWeights cover;
  /// A perfect fractional matching of H'.
  FractionalAssignment phi;
  Rational value;
  /// nu'(H_r^k), computed independently.
  Rational lp_value;
  /// The matching of size m inside G = H' - Q.
  Matching matching;
  /// Perfect matching of H' - Q' - V(matching).
  Matching completion;
  std::uint32_t s = 0;
  /// "exact" or "greedy".
  std::string route_used;
  PipelineHypotheses hypotheses;
  PipelineTrace trace;
};

/// Runs the constructive proof that H_r^k has a perfect fractional matching:
/// minimum cover and relabelling, weight closure and link, the three checks
/// on the link, a matching of size m in G, a perfect matching of the rest
/// through Q, and the window splice on f + Q'. The result is verified
/// perfect and equal to nu'(H_r^k) before it is returned.
///
/// Throws InternalContradiction when a claim that must hold fails, and
/// StepFailure when no route finds the matching of size m.
PipelineResult fractional_pm_pipeline(const KGraph& h, std::uint32_t m, std::uint32_t r,
                                      const PipelineConfig& cfg);

}  // namespace hypermatch
