#include "hypermatch/matching.hpp"

#include <algorithm>

#include "hypermatch/bitset.hpp"
#include "hypermatch/combinatorics.hpp"

namespace hypermatch {
namespace {

template <std::size_t W>
class MatchingSearch {
  using Bits = detail::FixedBits<W>;
  using EdgeList = std::vector<std::uint32_t>;

 public:
  MatchingSearch(const KGraph& h, const ExactNuOptions& options)
      : h_(h), options_(options), masks_(h.num_edges()), degree_(h.n(), 0) {
    for (std::size_t i = 0; i < h.num_edges(); ++i)
      for (auto v : h.edge(i)) masks_[i].set(v - 1);
  }

  ExactNuResult run() {
    const auto seed = greedy_matching(h_);
    best_size_ = seed.size();
    best_.clear();
    for (const auto& e : seed.edges) best_.push_back(static_cast<std::uint32_t>(*h_.find(e)));

    EdgeList all(h_.num_edges());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    root_bound_ = upper_bound(all, 0);
    if (best_size_ < root_bound_) recurse(all, 0);

    ExactNuResult out;
    out.nu = best_size_;
    out.nodes = nodes_;
    out.complete = !aborted_;
    for (auto i : best_) out.matching.edges.push_back(h_.edge_copy(i));
    return out;
  }

 private:
  // Greedy vertex cover size: an upper bound on the matching number.
  std::size_t greedy_cover(const EdgeList& alive) {
    EdgeList rest = alive;
    std::size_t picked = 0;
    while (!rest.empty()) {
      std::fill(degree_.begin(), degree_.end(), 0);
      for (auto i : rest)
        for (auto v : h_.edge(i)) ++degree_[v - 1];
      const auto top = std::max_element(degree_.begin(), degree_.end()) - degree_.begin();
      std::erase_if(rest, [&](std::uint32_t i) { return masks_[i].test(static_cast<std::size_t>(top)); });
      ++picked;
    }
    return picked;
  }

  std::size_t lp_cap(const EdgeList& alive) {
    std::vector<Vertex> flat;
    for (auto i : alive) {
      auto e = h_.edge(i);
      flat.insert(flat.end(), e.begin(), e.end());
    }
    const auto sub = KGraph::from_flat(h_.n(), h_.k(), std::move(flat));
    return static_cast<std::size_t>(floor(max_fractional_matching(sub).value).get_ui());
  }

  std::size_t upper_bound(const EdgeList& alive, std::size_t current) {
    Bits coverable;
    for (auto i : alive) coverable |= masks_[i];
    std::size_t cap = coverable.count() / h_.k();
    if (current + cap > best_size_) cap = std::min(cap, greedy_cover(alive));
    if (options_.lp_bound && current + cap > best_size_) cap = std::min(cap, lp_cap(alive));
    return current + cap;
  }

  void recurse(const EdgeList& alive, std::size_t current) {
    if (aborted_ || best_size_ >= root_bound_) return;
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return;
    }
    if (current > best_size_) {
      best_size_ = current;
      best_ = stack_;
    }
    if (alive.empty()) return;
    if (upper_bound(alive, current) <= best_size_) return;

    std::fill(degree_.begin(), degree_.end(), 0);
    for (auto i : alive)
      for (auto v : h_.edge(i)) ++degree_[v - 1];
    std::size_t pivot = degree_.size();
    for (std::size_t v = 0; v < degree_.size(); ++v)
      if (degree_[v] > 0 && (pivot == degree_.size() || degree_[v] < degree_[pivot])) pivot = v;

    EdgeList containing;
    for (auto i : alive)
      if (masks_[i].test(pivot)) containing.push_back(i);

    for (auto i : containing) {
      EdgeList next;
      next.reserve(alive.size());
      for (auto j : alive)
        if (!masks_[j].intersects(masks_[i])) next.push_back(j);
      stack_.push_back(i);
      recurse(next, current + 1);
      stack_.pop_back();
      if (aborted_ || best_size_ >= root_bound_) return;
    }

    EdgeList without;
    without.reserve(alive.size());
    for (auto j : alive)
      if (!masks_[j].test(pivot)) without.push_back(j);
    recurse(without, current);
  }

  const KGraph& h_;
  ExactNuOptions options_;
  std::vector<Bits> masks_;
  std::vector<std::uint64_t> degree_;
  EdgeList stack_;
  EdgeList best_;
  std::size_t best_size_ = 0;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactNuResult exact_nu(const KGraph& h, const ExactNuOptions& options) {
  if (h.empty()) return {};
  return detail::dispatch_width(h.n(), [&]<std::size_t W>() { return MatchingSearch<W>(h, options).run(); });
}

Matching greedy_matching(const KGraph& h) {
  Matching m;
  std::vector<char> used(h.n() + 1, 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (auto v : e) used[v] = 1;
    m.edges.emplace_back(e.begin(), e.end());
  }
  return m;
}

}  // namespace hypermatch
