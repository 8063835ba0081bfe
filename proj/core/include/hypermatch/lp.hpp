#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypermatch/kgraph.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

/// Edge weights phi in [0, 1]; edges not in the map carry weight 0.
struct FractionalAssignment {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::map<Edge, Rational> weights;

  Rational value() const;
  /// Sum of phi(e) over the edges containing v.
  Rational load(Vertex v) const;
  std::vector<Rational> loads() const;
  /// Drops zero entries.
  void prune();
};

/// Vertex weights w, w[v-1] for vertex v.
struct VertexWeights {
  std::vector<Rational> w;

  std::uint32_t n() const { return static_cast<std::uint32_t>(w.size()); }
  const Rational& operator()(Vertex v) const { return w[v - 1]; }
  Rational total() const;
};

/// Support inside E(h), weights in [0, 1], every vertex load at most 1.
bool is_fractional_matching(const KGraph& h, const FractionalAssignment& phi);

/// A fractional matching with value exactly n/k.
bool is_perfect_fractional_matching(const KGraph& h, const FractionalAssignment& phi);

/// Weights in [0, 1] and every edge of h has weight sum at least 1.
bool is_fractional_cover(const KGraph& h, const VertexWeights& w);

struct FractionalMatchingResult {
  Rational value;
  FractionalAssignment phi;
  /// Dual solution read off the optimal dictionary; a cover of equal value.
  VertexWeights certificate;
  std::uint64_t pivots = 0;
};

/// nu'(H) by exact simplex on the edge-variable packing program.
FractionalMatchingResult max_fractional_matching(const KGraph& h);

struct FractionalCoverResult {
  Rational value;
  VertexWeights w;
  std::uint64_t pivots = 0;
};

/// tau'(H) by exact two-phase simplex on the vertex-variable covering
/// program. Solved independently of max_fractional_matching.
FractionalCoverResult min_fractional_cover(const KGraph& h);

struct DualityReport {
  Rational nu_frac;
  Rational tau_frac;
  bool witnesses_valid = false;
  bool equal() const { return nu_frac == tau_frac; }
  bool holds() const { return witnesses_valid && equal(); }
};

DualityReport duality_report(const KGraph& h);

/// True iff nu'(H) == tau'(H) with both witnesses verified. A false result
/// means a bug in the solver.
bool check_duality(const KGraph& h);

/// Weight 1/k on each cyclic window {i, ..., i+k-1} (mod n) of [n]; a perfect
/// fractional matching of K_n^k. Requires n > k.
FractionalAssignment clique_window_matching(std::uint32_t n, std::uint32_t k);

/// All k-sets of [n_total] whose weight sum is at least 1.
KGraph weight_closure(std::uint32_t n_total, std::uint32_t k, const VertexWeights& w);

struct Relabeling {
  KGraph graph;
  VertexWeights weights;
  /// order[i] is the old label of new vertex i+1.
  std::vector<Vertex> order;
};

/// Non-increasing order of w on the first `prefix` vertices (all of them by
/// default), ties by ascending index; later vertices stay in place.
std::vector<Vertex> weight_order(const VertexWeights& w, std::uint32_t prefix);

/// Renames the vertices of h so that weights are non-increasing.
Relabeling relabel_by_weights(const KGraph& h, const VertexWeights& w);

/// Same, but only the first `prefix` vertices are reordered.
Relabeling relabel_prefix_by_weights(const KGraph& h, const VertexWeights& w, std::uint32_t prefix);

/// Applies an order as produced by weight_order: new vertex i+1 is order[i].
KGraph apply_order(const KGraph& h, const std::vector<Vertex>& order);

}  // namespace hypermatch
