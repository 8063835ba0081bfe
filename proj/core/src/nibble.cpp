#include <algorithm>
#include <numeric>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/matching.hpp"

namespace hypermatch {
namespace {

std::uint64_t max_codegree(const KGraph& h) {
  if (h.empty()) return 0;
  if (h.k() < 3) return 1;
  return max_l_degree(h, 2);
}

}  // namespace

void NibbleConfig::validate() const {
  if (!(bite_fraction > 0.0 && bite_fraction < 1.0)) throw ParameterError("bite_fraction must lie in (0, 1)");
  if (!(sigma_target > 0.0 && sigma_target < 1.0)) throw ParameterError("sigma_target must lie in (0, 1)");
  if (!(tau_check > 0.0)) throw ParameterError("tau_check must be positive");
  if (min_degree < 0.0) throw ParameterError("min_degree must be nonnegative");
}

RegularityGate regularity_gate(const KGraph& h, double tau, double min_degree) {
  RegularityGate g;
  if (h.n() == 0) return g;
  const auto d = h.vertex_degrees();
  g.min_degree = *std::min_element(d.begin(), d.end());
  g.max_degree = *std::max_element(d.begin(), d.end());
  g.average_degree = static_cast<double>(h.num_edges()) * h.k() / h.n();
  g.max_codegree = max_codegree(h);
  const double lo = (1.0 - tau) * g.average_degree;
  const double hi = (1.0 + tau) * g.average_degree;
  g.degrees_within_slack = std::all_of(d.begin(), d.end(), [&](std::uint64_t x) {
    return static_cast<double>(x) > lo && static_cast<double>(x) < hi;
  });
  g.codegree_small = static_cast<double>(g.max_codegree) < tau * g.average_degree;
  g.degree_above_floor = g.average_degree >= min_degree;
  return g;
}

NibbleResult nibble_matching(const KGraph& h, const NibbleConfig& cfg) {
  cfg.validate();
  NibbleResult out;
  out.gate = regularity_gate(h, cfg.tau_check, cfg.min_degree);
  if (h.n() == 0) {
    out.covered_fraction = 0;
    return out;
  }

  Rng rng(cfg.seed);
  const auto k = h.k();
  std::vector<char> alive(h.n() + 1, 1);
  std::size_t alive_vertices = h.n();
  std::vector<std::uint32_t> edges(h.num_edges());
  std::iota(edges.begin(), edges.end(), 0U);
  std::vector<std::uint32_t> hits(h.n() + 1, 0);
  std::vector<std::uint32_t> sampled;

  for (std::uint32_t round = 0; round < cfg.max_rounds && !edges.empty(); ++round) {
    const double avg = static_cast<double>(edges.size()) * k / static_cast<double>(alive_vertices);
    if (avg < 1.0) break;
    const double p = cfg.bite_fraction / avg;

    sampled.clear();
    for (auto i : edges)
      if (uniform01(rng) < p) sampled.push_back(i);
    for (auto i : sampled)
      for (auto v : h.edge(i)) ++hits[v];

    NibbleRound rec;
    rec.sampled = sampled.size();
    rec.average_degree = avg;
    for (auto i : sampled) {
      const auto e = h.edge(i);
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return hits[v] == 1; })) {
        out.matching.edges.emplace_back(e.begin(), e.end());
        ++rec.accepted;
      }
    }
    for (auto i : sampled)
      for (auto v : h.edge(i)) hits[v] = 0;
    for (std::size_t j = out.matching.size() - rec.accepted; j < out.matching.size(); ++j)
      for (auto v : out.matching.edges[j]) {
        alive[v] = 0;
        --alive_vertices;
      }
    std::erase_if(edges, [&](std::uint32_t i) {
      const auto e = h.edge(i);
      return std::any_of(e.begin(), e.end(), [&](Vertex v) { return alive[v] == 0; });
    });
    out.rounds.push_back(rec);
  }

  // greedy finish over the leftover graph, lexicographic order
  for (auto i : edges) {
    const auto e = h.edge(i);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return alive[v] == 0; })) continue;
    for (auto v : e) alive[v] = 0;
    out.matching.edges.emplace_back(e.begin(), e.end());
    ++out.greedy_cleanup;
  }

  out.covered_fraction = ratio(static_cast<unsigned long>(k * out.matching.size()), h.n());
  out.covered_fraction.canonicalize();
  out.sigma_met = 1 - out.covered_fraction.get_d() <= cfg.sigma_target;
  return out;
}

SparsifyResult sparsify_by_fractional(const KGraph& h, const std::vector<FractionalCopy>& copies,
                                      std::uint64_t seed) {
  std::vector<std::uint32_t> copies_per_edge(h.num_edges(), 0);
  std::vector<char> in_copy(h.n() + 1, 0);
  for (std::size_t c = 0; c < copies.size(); ++c) {
    const auto& copy = copies[c];
    for (auto v : copy.vertices) {
      if (v < 1 || v > h.n()) throw PreconditionError("copy vertex outside [1, n]");
      in_copy[v] = 1;
    }
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      const auto e = h.edge(i);
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in_copy[v] != 0; }))
        if (++copies_per_edge[i] > 1)
          throw PreconditionError("edge lies in more than one copy");
    }
    // phi must be a perfect fractional matching of H[R] in the labels of H
    std::vector<Rational> load(h.n() + 1, Rational(0));
    Rational value = 0;
    for (const auto& [e, x] : copy.phi.weights) {
      if (sgn(x) < 0 || x > 1) throw PreconditionError("copy weight outside [0, 1]");
      if (sgn(x) == 0) continue;
      if (!h.contains(e) || !std::all_of(e.begin(), e.end(), [&](Vertex v) { return in_copy[v] != 0; }))
        throw PreconditionError("copy assignment uses an edge outside H[R]");
      for (auto v : e) load[v] += x;
      value += x;
    }
    for (auto v : copy.vertices)
      if (load[v] > 1) throw PreconditionError("copy assignment overloads a vertex");
    if (value * h.k() != copy.vertices.size())
      throw PreconditionError("copy " + std::to_string(c) + " assignment is not perfect");
    for (auto v : copy.vertices) in_copy[v] = 0;
  }

  Rng rng(seed);
  std::vector<Vertex> flat;
  for (const auto& copy : copies)
    for (const auto& [e, x] : copy.phi.weights)
      if (sgn(x) > 0 && bernoulli(rng, x)) flat.insert(flat.end(), e.begin(), e.end());

  SparsifyResult out;
  out.graph = KGraph::from_flat(h.n(), h.k(), std::move(flat));
  if (h.n() > 0) {
    const auto d = out.graph.vertex_degrees();
    out.min_degree = *std::min_element(d.begin(), d.end());
    out.max_degree = *std::max_element(d.begin(), d.end());
    out.mean_degree = static_cast<double>(std::accumulate(d.begin(), d.end(), std::uint64_t{0})) / h.n();
  }
  out.max_codegree = max_codegree(out.graph);
  return out;
}

}  // namespace hypermatch
