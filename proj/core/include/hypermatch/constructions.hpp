#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/kgraph.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

/// A split of [1, n] into disjoint parts U and W, both ascending.
struct VertexPartition {
  std::vector<Vertex> u;
  std::vector<Vertex> w;

  std::uint32_t n() const { return static_cast<std::uint32_t>(u.size() + w.size()); }
  /// Throws std::invalid_argument unless U and W partition [1, n].
  void validate() const;
  /// W = `w`, U = the rest of [1, n].
  static VertexPartition from_w(std::uint32_t n, std::vector<Vertex> w);
};

/// Parameters of a degree-threshold question with the thresholds it implies.
struct ThresholdSpec {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  BigInt vertex_degree_threshold;
  BigInt erdos_threshold;
  std::optional<Rational> beta;

  /// Computes both thresholds; warns when beta exceeds 1/(3^k 2 k^5 k!)^4.
  static ThresholdSpec make(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                            std::optional<Rational> beta = std::nullopt);
};

/// Upper bound on beta(k): 1 / (3^k * 2 * k^5 * k!)^4.
Rational beta_upper_bound(std::uint32_t k);

/// All k-sets e with 1 <= |e & W| <= l. Throws ParameterError unless 1 <= l <= k.
KGraph build_hkl(const VertexPartition& p, std::uint32_t k, std::uint32_t l);

/// The extremal graph H_k(n, m): W = [m-1], U = [m, n], l = k-1.
struct ExtremalGraph {
  KGraph graph;
  VertexPartition partition;
};
ExtremalGraph build_hknm(std::uint32_t n, std::uint32_t k, std::uint32_t m);

KGraph complete(std::uint32_t n, std::uint32_t k);

/// H plus r new vertices Q = {n+1..n+r} and every k-set meeting Q. r = 0 returns H.
KGraph join_clique(const KGraph& h, std::uint32_t r);

/// Vertices A = [1, a], B = [a+1, a+b]; edges are the k-sets meeting A in an
/// even number of vertices. Warns unless |a-b| <= 2 and a is odd.
KGraph parity_construction(std::uint32_t a, std::uint32_t b, std::uint32_t k);

/// K_n^k minus every edge inside [1, n - n/k + 1]. Requires k | n.
KGraph space_barrier(std::uint32_t n, std::uint32_t k);

/// C(n-1, k-1) - C(n-m, k-1).
BigInt vertex_degree_threshold(std::uint32_t n, std::uint32_t k, std::uint32_t m);

/// max{C(km-1, k), C(n, k) - C(n-m+1, k)} + 1.
BigInt erdos_threshold(std::uint32_t n, std::uint32_t k, std::uint32_t m);

/// max{1/2, 1 - (1 - 1/k)^(k-l)}.
Rational l_degree_conjectured_fraction(std::uint32_t k, std::uint32_t l);

/// Binomial random k-graph: each k-set independently with probability p.
KGraph random_kgraph(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed);

/// Outcome of rejection sampling; graph is empty when the tries ran out.
struct ConditionedSample {
  std::optional<KGraph> graph;
  std::uint64_t tries_used = 0;
  bool exhausted() const { return !graph.has_value(); }
};

/// Rejection sampler for delta_1 >= floor. Each try draws p uniformly from
/// [floor / C(n-1, k-1), 1] and samples random_kgraph(n, k, p). When `floor`
/// is not given it defaults to vertex_degree_threshold(n, k, m) + 1.
ConditionedSample random_kgraph_conditioned(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                            std::optional<BigInt> floor, std::uint64_t tries,
                                            std::uint64_t seed);

/// Near-extremal planted model: each edge of H_k(n, m) survives with
/// probability keep, every other k-set is added with probability extra.
KGraph random_planted(std::uint32_t n, std::uint32_t k, std::uint32_t m, double keep, double extra,
                      std::uint64_t seed);

}  // namespace hypermatch
