#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypermatch/kgraph.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

/// Default cap on branch-and-bound nodes for one exact_nu call.
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ULL;

struct ExactNuOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Prune with floor(nu') of the remaining graph at every node. Costly.
  bool lp_bound = false;
};

struct ExactNuResult {
  std::size_t nu = 0;
  Matching matching;
  std::uint64_t nodes = 0;
  /// False when the node budget ran out; nu is then only a lower bound.
  bool complete = true;
};

/// Maximum matching by branch and bound. Branches on the remaining vertex of
/// least positive degree (lowest index on ties): take one of its edges, or
/// drop it. Bounds: floor(coverable vertices / k) and a greedy vertex cover.
/// Supports n <= 256; exponential in the worst case.
ExactNuResult exact_nu(const KGraph& h, const ExactNuOptions& options = {});

/// Maximal matching from one pass over the edges in lexicographic order.
Matching greedy_matching(const KGraph& h);

struct NibbleConfig {
  /// Expected number of sampled edges per vertex each round, in (0, 1).
  double bite_fraction = 0.25;
  std::uint32_t max_rounds = 200;
  /// Target uncovered fraction sigma, in (0, 1).
  double sigma_target = 0.1;
  std::uint64_t seed = 0;
  /// Regularity slack tau used by the gate check.
  double tau_check = 0.1;
  /// Minimum average degree d0 the gate asks for.
  double min_degree = 0.0;

  void validate() const;
};

/// Whether the input looks like the near-regular, small-codegree graphs the
/// nibble is designed for. Reported, never enforced.
struct RegularityGate {
  double average_degree = 0;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t max_codegree = 0;
  bool degrees_within_slack = false;
  bool codegree_small = false;
  bool degree_above_floor = false;
  bool passes() const { return degrees_within_slack && codegree_small && degree_above_floor; }
};

RegularityGate regularity_gate(const KGraph& h, double tau, double min_degree);

struct NibbleRound {
  std::uint64_t sampled = 0;
  std::uint64_t accepted = 0;
  double average_degree = 0;
};

struct NibbleResult {
  Matching matching;
  Rational covered_fraction;  // k |M| / n
  std::vector<NibbleRound> rounds;
  std::uint64_t greedy_cleanup = 0;
  RegularityGate gate;
  bool sigma_met = false;
};

/// Semi-random matching: each round samples every surviving edge with
/// probability bite_fraction / D (D = current average degree), keeps the
/// sampled edges that meet no other sampled edge, and deletes the covered
/// vertices. Stops after max_rounds or once D < 1, then finishes greedily.
NibbleResult nibble_matching(const KGraph& h, const NibbleConfig& cfg);

/// A vertex subset R (ascending) with a perfect fractional matching phi of H[R]
/// written in the labels of H.
struct FractionalCopy {
  std::vector<Vertex> vertices;
  FractionalAssignment phi;
};

struct SparsifyResult {
  KGraph graph;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  double mean_degree = 0;
  std::uint64_t max_codegree = 0;
};

/// Random spanning subgraph: each edge e inside copy R^i is kept independently
/// with probability phi^i(e). Throws PreconditionError if an edge of H lies in
/// two copies or a copy's assignment is not a perfect fractional matching of
/// H[R^i].
SparsifyResult sparsify_by_fractional(const KGraph& h, const std::vector<FractionalCopy>& copies,
                                      std::uint64_t seed);

}  // namespace hypermatch
