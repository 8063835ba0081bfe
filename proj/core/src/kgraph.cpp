#include "hypermatch/kgraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hypermatch/bitset.hpp"
#include "hypermatch/combinatorics.hpp"
#include "hypermatch/errors.hpp"

namespace hypermatch {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

// Lexicographic ranking of ascending l-subsets of [n].
class LexRanker {
 public:
  LexRanker(std::uint32_t n, std::uint32_t l) : n_(n), l_(l), table_((n + 1) * (l + 1), 0) {
    for (std::uint32_t a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (std::uint32_t b = 1; b <= std::min(a, l); ++b)
        at(a, b) = (b == a) ? 1 : sat_add(at(a - 1, b - 1), at(a - 1, b));
    }
    total_ = binomial_u64(n, l);
  }

  std::uint64_t total() const { return total_; }

  std::uint64_t rank(std::span<const Vertex> s) const {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < l_; ++i) acc += c(n_ - s[i], l_ - i);
    return total_ - 1 - acc;
  }

  std::vector<std::uint64_t> release() && { return std::move(table_); }

 private:
  std::uint64_t& at(std::uint32_t a, std::uint32_t b) { return table_[a * (l_ + 1) + b]; }
  std::uint64_t c(std::uint32_t a, std::uint32_t b) const { return b > a ? 0 : table_[a * (l_ + 1) + b]; }

  std::uint32_t n_, l_;
  std::vector<std::uint64_t> table_;
  std::uint64_t total_ = 0;
};

std::vector<Vertex> checked_set(const KGraph& h, std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InvalidQuery("vertex set has repeated vertices");
  for (auto v : out)
    if (v < 1 || v > h.n()) throw InvalidQuery("vertex " + std::to_string(v) + " outside [1, n]");
  return out;
}

// Counts d(T) for every l-subset T appearing inside some edge, indexed by lex rank.
std::vector<std::uint64_t> l_degree_table(const KGraph& h, std::uint32_t l) {
  if (l + 1 > h.k()) throw InvalidQuery("l must be at most k-1");
  if (l == 0) return {h.num_edges()};
  LexRanker ranker(h.n(), l);
  if (ranker.total() > 200'000'000ULL) throw std::length_error("too many l-subsets to tabulate");
  std::vector<std::uint64_t> counts(ranker.total(), 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for_each_subset_of(e, l, [&](std::span<const Vertex> t) {
      ++counts[ranker.rank(t)];
      return true;
    });
  }
  return counts;
}

}  // namespace

KGraph::KGraph(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
  if (k == 0) throw std::invalid_argument("uniformity must be at least 1");
  build_binomials();
}

KGraph::KGraph(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges) : n_(n), k_(k) {
  if (k == 0) throw std::invalid_argument("uniformity must be at least 1");
  flat_.reserve(edges.size() * k);
  for (auto& e : edges) {
    if (e.size() != k) throw std::invalid_argument("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-graph");
    std::sort(e.begin(), e.end());
    flat_.insert(flat_.end(), e.begin(), e.end());
  }
  build_binomials();
  canonicalise();
}

KGraph KGraph::from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat) {
  if (k == 0) throw std::invalid_argument("uniformity must be at least 1");
  if (flat.size() % k != 0) throw std::invalid_argument("flat edge array length is not a multiple of k");
  KGraph g;
  g.n_ = n;
  g.k_ = k;
  g.flat_ = std::move(flat);
  g.build_binomials();
  g.canonicalise();
  return g;
}

void KGraph::build_binomials() {
  LexRanker ranker(n_, k_);
  binom_ = std::move(ranker).release();
}

void KGraph::canonicalise() {
  const std::size_t m = flat_.size() / k_;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex* e = flat_.data() + i * k_;
    for (std::uint32_t j = 0; j < k_; ++j) {
      if (e[j] < 1 || e[j] > n_) throw std::invalid_argument("edge vertex " + std::to_string(e[j]) + " outside [1, n]");
      if (j > 0 && e[j] <= e[j - 1]) throw std::invalid_argument("edge with repeated vertices");
    }
  }
  std::vector<std::uint64_t> ranks(m);
  for (std::size_t i = 0; i < m; ++i) ranks[i] = rank_of({flat_.data() + i * k_, k_});
  if (!std::is_sorted(ranks.begin(), ranks.end())) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ranks[a] < ranks[b]; });
    std::vector<Vertex> flat(flat_.size());
    std::vector<std::uint64_t> sorted(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::copy_n(flat_.data() + order[i] * k_, k_, flat.data() + i * k_);
      sorted[i] = ranks[order[i]];
    }
    flat_ = std::move(flat);
    ranks = std::move(sorted);
  }
  if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
    throw std::invalid_argument("duplicate edge");
  ranks_ = std::move(ranks);
}

std::uint64_t KGraph::rank_of(std::span<const Vertex> s) const {
  const auto c = [&](std::uint32_t a, std::uint32_t b) -> std::uint64_t {
    return b > a ? 0 : binom_[a * (k_ + 1) + b];
  };
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < k_; ++i) acc += c(n_ - s[i], k_ - i);
  return c(n_, k_) - 1 - acc;
}

std::optional<std::size_t> KGraph::find(std::span<const Vertex> s) const {
  if (s.size() != k_) return std::nullopt;
  for (std::uint32_t j = 0; j < k_; ++j)
    if (s[j] < 1 || s[j] > n_ || (j > 0 && s[j] <= s[j - 1])) return std::nullopt;
  const auto r = rank_of(s);
  auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
  if (it == ranks_.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - ranks_.begin());
}

Edge KGraph::edge_copy(std::size_t i) const {
  auto e = edge(i);
  return {e.begin(), e.end()};
}

std::vector<Edge> KGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) out.push_back(edge_copy(i));
  return out;
}

std::vector<std::uint64_t> KGraph::vertex_degrees() const {
  std::vector<std::uint64_t> d(n_, 0);
  for (auto v : flat_) ++d[v - 1];
  return d;
}

std::vector<std::uint64_t> KGraph::edge_masks() const {
  if (n_ > 64) return {};
  std::vector<std::uint64_t> masks(num_edges(), 0);
  for (std::size_t i = 0; i < num_edges(); ++i)
    for (auto v : edge(i)) masks[i] |= std::uint64_t{1} << (v - 1);
  return masks;
}

std::uint64_t KGraph::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  mix(n_);
  mix(k_);
  for (auto v : flat_) mix(v);
  return h;
}

std::vector<Vertex> Matching::vertices() const {
  std::vector<Vertex> out;
  for (const auto& e : edges) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t degree(const KGraph& h, std::span<const Vertex> t) {
  if (t.size() > h.k()) throw InvalidQuery("|T| exceeds the uniformity");
  const auto s = checked_set(h, t);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
  }
  return count;
}

std::uint64_t min_l_degree(const KGraph& h, std::uint32_t l) {
  if (l + 1 > h.k()) throw InvalidQuery("l must be at most k-1");
  if (l > h.n()) throw InvalidQuery("l exceeds the number of vertices");
  if (l == 1) {
    auto d = h.vertex_degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
  }
  auto counts = l_degree_table(h, l);
  return counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
}

std::uint64_t max_l_degree(const KGraph& h, std::uint32_t l) {
  if (l + 1 > h.k()) throw InvalidQuery("l must be at most k-1");
  if (l > h.n()) throw InvalidQuery("l exceeds the number of vertices");
  if (l == 1) {
    auto d = h.vertex_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }
  auto counts = l_degree_table(h, l);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

KGraph link(const KGraph& h, Vertex v) {
  if (v < 1 || v > h.n()) throw InvalidQuery("link vertex outside [1, n]");
  if (h.k() < 2) throw InvalidQuery("link of a 1-graph is undefined");
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (auto u : e)
      if (u != v) flat.push_back(u > v ? u - 1 : u);
  }
  return KGraph::from_flat(h.n() - 1, h.k() - 1, std::move(flat));
}

Subgraph induced(const KGraph& h, std::span<const Vertex> s) {
  const auto set = checked_set(h, s);
  std::vector<Vertex> relabel(h.n() + 1, 0);
  for (std::size_t i = 0; i < set.size(); ++i) relabel[set[i]] = static_cast<Vertex>(i + 1);
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return relabel[u] != 0; }))
      for (auto u : e) flat.push_back(relabel[u]);
  }
  return {KGraph::from_flat(static_cast<std::uint32_t>(set.size()), h.k(), std::move(flat)), set};
}

Subgraph remove(const KGraph& h, std::span<const Vertex> s) {
  const auto set = checked_set(h, s);
  return induced(h, complement(h.n(), set));
}

std::vector<Vertex> complement(std::uint32_t n, std::span<const Vertex> s) {
  std::vector<char> in(n + 1, 0);
  for (auto v : s)
    if (v >= 1 && v <= n) in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

namespace {

template <std::size_t W>
class IndependentSetSearch {
  using Bits = detail::FixedBits<W>;

 public:
  explicit IndependentSetSearch(const KGraph& h) : h_(h), incident_(h.n()) {
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      Bits m;
      for (auto v : h.edge(i)) m.set(v - 1);
      for (auto v : h.edge(i)) incident_[v - 1].push_back(m);
    }
  }

  IndependentSet run() {
    Bits all;
    for (std::size_t v = 0; v < h_.n(); ++v) all.set(v);
    // a vertex lying in a 1-edge can never be chosen
    if (h_.k() == 1)
      for (std::size_t i = 0; i < h_.num_edges(); ++i) all.reset(h_.edge(i)[0] - 1);
    Bits chosen;
    recurse(chosen, 0, all);
    IndependentSet out;
    out.size = best_size_;
    best_.for_each([&](std::size_t v) { out.vertices.push_back(static_cast<Vertex>(v + 1)); });
    return out;
  }

 private:
  // Greedy partition of the candidates into complete sub-k-graphs, lowest
  // index first; each part holds at most k-1 vertices of an independent set.
  std::size_t clique_cover_bound(const Bits& cand) const {
    const std::uint32_t k = h_.k();
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> probe;
    cand.for_each([&](std::size_t idx) {
      const auto v = static_cast<Vertex>(idx + 1);
      for (auto& part : parts) {
        bool fits = true;
        if (part.size() + 1 >= k) {
          for_each_subset_of(part, k - 1, [&](std::span<const Vertex> rest) {
            probe.assign(rest.begin(), rest.end());
            probe.push_back(v);
            std::sort(probe.begin(), probe.end());
            fits = h_.contains(probe);
            return fits;
          });
        }
        if (fits) {
          part.push_back(v);
          return;
        }
      }
      parts.push_back({v});
    });
    std::size_t bound = 0;
    for (const auto& part : parts) bound += std::min<std::size_t>(part.size(), k - 1);
    return bound;
  }

  void recurse(const Bits& chosen, std::size_t chosen_size, const Bits& cand) {
    if (chosen_size > best_size_) {
      best_size_ = chosen_size;
      best_ = chosen;
    }
    if (!cand.any()) return;
    if (chosen_size + cand.count() <= best_size_) return;
    if (chosen_size + clique_cover_bound(cand) <= best_size_) return;

    std::size_t v = 0;
    for (std::size_t i = 0; i < W; ++i)
      if (cand.w[i]) {
        v = i * 64 + static_cast<std::size_t>(std::countr_zero(cand.w[i]));
        break;
      }

    Bits with = chosen;
    with.set(v);
    Bits next = cand;
    next.reset(v);
    // candidates that would now complete an edge through v drop out
    for (const auto& e : incident_[v]) {
      Bits rest = e.without(with);
      if (rest.count() == 1) next = next.without(rest);
    }
    recurse(with, chosen_size + 1, next);

    Bits skip = cand;
    skip.reset(v);
    recurse(chosen, chosen_size, skip);
  }

  const KGraph& h_;
  std::vector<std::vector<Bits>> incident_;
  std::size_t best_size_ = 0;
  Bits best_;
};

}  // namespace

IndependentSet max_independent_set(const KGraph& h) {
  if (h.n() == 0) return {};
  return detail::dispatch_width(h.n(), [&]<std::size_t W>() { return IndependentSetSearch<W>(h).run(); });
}

std::size_t independence_number(const KGraph& h) { return max_independent_set(h).size; }

bool is_stable(const KGraph& h) {
  Edge probe(h.k());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::uint32_t j = 0; j < h.k(); ++j) {
      const Vertex floor_v = j == 0 ? 1 : e[j - 1] + 1;
      if (e[j] <= floor_v) continue;
      std::copy(e.begin(), e.end(), probe.begin());
      --probe[j];
      if (!h.contains(probe)) return false;
    }
  }
  return true;
}

KGraph stable_closure(const KGraph& h) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> queue = h.edges();
  for (const auto& e : queue) seen.insert(h.rank_of(e));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t j = 0; j < h.k(); ++j) {
      Edge e = queue[head];
      const Vertex floor_v = j == 0 ? 1 : e[j - 1] + 1;
      if (e[j] <= floor_v) continue;
      --e[j];
      if (seen.insert(h.rank_of(e)).second) queue.push_back(std::move(e));
    }
  }
  return KGraph(h.n(), h.k(), std::move(queue));
}

bool verify_matching(const KGraph& h, const Matching& m) {
  std::vector<char> used(h.n() + 1, 0);
  for (const auto& e : m.edges) {
    if (!std::is_sorted(e.begin(), e.end())) {
      Edge sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (!h.contains(sorted)) return false;
    } else if (!h.contains(e)) {
      return false;
    }
    for (auto v : e) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace hypermatch
