#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypermatch/types.hpp"

namespace hypermatch {

/// A k-uniform hypergraph on the vertex set [1, n].
///
/// Edges are kept in lexicographic order in one flat array, alongside their
/// lexicographic ranks among all k-subsets of [n]; membership is a binary
/// search over the ranks. The object is immutable once built and may be
/// shared between threads.
class KGraph {
 public:
  KGraph() = default;

  /// Edgeless graph.
  KGraph(std::uint32_t n, std::uint32_t k);

  /// Validates and canonicalises `edges`. Each edge is sorted; an edge with
  /// repeated or out-of-range vertices, a wrong size, or a duplicate of
  /// another edge raises std::invalid_argument.
  KGraph(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges);

  /// Builds from a flat array of already-sorted k-tuples (any edge order).
  static KGraph from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return ranks_.size(); }
  bool empty() const noexcept { return ranks_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * k_, k_};
  }
  Edge edge_copy(std::size_t i) const;
  std::vector<Edge> edges() const;
  std::span<const Vertex> flat() const noexcept { return flat_; }

  /// Lexicographic rank of an ascending k-subset of [n].
  std::uint64_t rank_of(std::span<const Vertex> sorted_set) const;

  /// Index of the edge equal to `sorted_set`, if present.
  std::optional<std::size_t> find(std::span<const Vertex> sorted_set) const;
  bool contains(std::span<const Vertex> sorted_set) const { return find(sorted_set).has_value(); }

  /// Per-vertex degrees; entry v-1 holds d({v}).
  std::vector<std::uint64_t> vertex_degrees() const;

  /// Edge bitmasks for n <= 64 (bit v-1 set for vertex v); empty otherwise.
  std::vector<std::uint64_t> edge_masks() const;

  /// FNV-1a over (n, k, edges); used to detect mutation between two points.
  std::uint64_t content_hash() const;

  friend bool operator==(const KGraph& a, const KGraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
  }

 private:
  void build_binomials();
  void canonicalise();

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 1;
  std::vector<Vertex> flat_;
  std::vector<std::uint64_t> ranks_;
  // binom_[a * (k_ + 1) + b] = C(a, b) for a <= n, b <= k.
  std::vector<std::uint64_t> binom_;
};

/// A set of pairwise disjoint edges of some host graph.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
  /// All vertices covered, ascending.
  std::vector<Vertex> vertices() const;
};

/// An induced or reduced subgraph together with the original label of each
/// new vertex: original[i] is the old label of new vertex i+1.
struct Subgraph {
  KGraph graph;
  std::vector<Vertex> original;
};

/// d_H(T): number of edges containing T. Throws InvalidQuery if |T| > k.
std::uint64_t degree(const KGraph& h, std::span<const Vertex> t);

/// delta_l(H). Throws InvalidQuery if l > k-1.
std::uint64_t min_l_degree(const KGraph& h, std::uint32_t l);

/// Delta_l(H). Throws InvalidQuery if l > k-1.
std::uint64_t max_l_degree(const KGraph& h, std::uint32_t l);

/// The (k-1)-graph N_H(v) on [n-1]; vertices above v shift down by one.
KGraph link(const KGraph& h, Vertex v);

/// H[S], relabelled order-preservingly.
Subgraph induced(const KGraph& h, std::span<const Vertex> s);

/// H - S = H[V \ S].
Subgraph remove(const KGraph& h, std::span<const Vertex> s);

/// Size of a largest vertex set spanning no edge, with a witness.
struct IndependentSet {
  std::size_t size = 0;
  std::vector<Vertex> vertices;
};

/// Exact branch-and-bound with a greedy clique-cover bound. Exponential;
/// meant for n up to about 40 at k = 3. Requires n <= 256.
IndependentSet max_independent_set(const KGraph& h);
std::size_t independence_number(const KGraph& h);

/// True iff the edge set is closed under the coordinatewise order on
/// ascending k-sets. Checks single-coordinate decrements only, which
/// generate the order.
bool is_stable(const KGraph& h);

/// Closes H downward under single-coordinate decrements.
KGraph stable_closure(const KGraph& h);

/// True iff every member of m is an edge of h and members are pairwise disjoint.
bool verify_matching(const KGraph& h, const Matching& m);

/// Ascending complement of s in [1, n].
std::vector<Vertex> complement(std::uint32_t n, std::span<const Vertex> s);

}  // namespace hypermatch
