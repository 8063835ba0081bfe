#include "hypermatch/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"

namespace hypermatch {

SampleFamily first_round_sampler(const KGraph& h, const PipelineConfig& cfg) {
  const auto n = h.n();
  const auto k = h.k();
  SampleFamily f;
  f.n = n;
  f.k = k;
  f.vertex_counts.assign(n, 0);
  f.edge_counts.assign(h.num_edges(), 0);

  const double dn = static_cast<double>(n);
  const double keep = cfg.sampler.keep_probability ? cfg.sampler.keep_probability->get_d()
                                                   : std::pow(dn, -cfg.sampler.p_exponent.get_d());
  const std::uint64_t copies = cfg.sampler.copies
                                   ? *cfg.sampler.copies
                                   : static_cast<std::uint64_t>(std::ceil(std::pow(dn, cfg.sampler.copy_exponent.get_d())));
  f.keep_probability = keep;
  Rational keep_q;
  if (cfg.sampler.keep_probability)
    keep_q = *cfg.sampler.keep_probability;
  else
    keep_q = Rational(keep);

  f.copies.resize(copies);
  f.untrimmed_sizes.resize(copies);
  for (std::uint64_t i = 0; i < copies; ++i) {
    Rng rng(derive_seed(cfg.seed, i));
    auto& r = f.copies[i];
    for (Vertex v = 1; v <= n; ++v)
      if (bernoulli(rng, keep_q)) r.push_back(v);
    f.untrimmed_sizes[i] = static_cast<std::uint32_t>(r.size());
    while (r.size() % k != 0) r.erase(r.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, r.size())));
    for (auto v : r) ++f.vertex_counts[v - 1];
  }

  // copies containing each vertex, then pair counts one anchor vertex at a time
  std::vector<std::vector<std::uint32_t>> member(n + 1);
  for (std::uint32_t i = 0; i < copies; ++i)
    for (auto v : f.copies[i]) member[v].push_back(i);
  std::vector<std::uint32_t> count(n + 1, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 1; u <= n; ++u) {
    for (auto i : member[u]) {
      const auto& r = f.copies[i];
      for (auto it = std::upper_bound(r.begin(), r.end(), u); it != r.end(); ++it)
        if (count[*it]++ == 0) touched.push_back(*it);
    }
    for (auto v : touched) {
      ++f.pair_histogram[count[v]];
      f.max_pair_incidence = std::max(f.max_pair_incidence, count[v]);
      count[v] = 0;
    }
    touched.clear();
  }

  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto edge = h.edge(e);
    const auto pivot = *std::min_element(edge.begin(), edge.end(), [&](Vertex a, Vertex b) {
      return member[a].size() < member[b].size();
    });
    for (auto i : member[pivot]) {
      const auto& r = f.copies[i];
      if (std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return std::binary_search(r.begin(), r.end(), v); }))
        ++f.edge_counts[e];
    }
  }
  return f;
}

SamplerReport check_sampler_properties(const SampleFamily& f, const KGraph& h, const SamplerThresholds& t) {
  SamplerReport rep;
  rep.expected_y = static_cast<double>(f.copies.size()) * f.keep_probability;
  rep.expected_size = static_cast<double>(f.n) * f.keep_probability;
  if (!f.vertex_counts.empty()) {
    rep.y_min = *std::min_element(f.vertex_counts.begin(), f.vertex_counts.end());
    rep.y_max = *std::max_element(f.vertex_counts.begin(), f.vertex_counts.end());
  }
  rep.y_concentrated = std::all_of(f.vertex_counts.begin(), f.vertex_counts.end(), [&](std::uint32_t y) {
    return std::abs(static_cast<double>(y) - rep.expected_y) <= t.y_slack * rep.expected_y;
  });

  if (!f.copies.empty()) {
    const auto [lo, hi] = std::minmax_element(f.copies.begin(), f.copies.end(),
                                              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    rep.size_min = static_cast<std::uint32_t>(lo->size());
    rep.size_max = static_cast<std::uint32_t>(hi->size());
  }
  rep.sizes_concentrated = std::all_of(f.copies.begin(), f.copies.end(), [&](const auto& r) {
    return std::abs(static_cast<double>(r.size()) - rep.expected_size) <= t.size_slack * rep.expected_size;
  });

  rep.max_pair = f.max_pair_incidence;
  rep.pairs_ok = rep.max_pair <= t.max_pair;
  rep.max_edge = f.edge_counts.empty() ? 0 : *std::max_element(f.edge_counts.begin(), f.edge_counts.end());
  rep.edges_ok = rep.max_edge <= t.max_edge;

  if (t.rho_prime) {
    const auto k = h.k();
    for (std::size_t i = 0; i < f.copies.size(); ++i) {
      const auto& r = f.copies[i];
      const auto size = static_cast<std::uint32_t>(r.size());
      if (size == 0) continue;
      const auto sub = induced(h, r).graph;
      const BigInt delta = sub.n() > 0 && k >= 2 ? BigInt(static_cast<unsigned long>(min_l_degree(sub, 1))) : BigInt(0);
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), size, k - 1);
      const Rational bound =
          Rational(binomial(size - 1, k - 1) - binomial(size - size / k, k - 1)) - *t.rho_prime * Rational(power);
      if (!(Rational(delta) > bound)) rep.degree_failures.push_back(i);
    }
    rep.degrees_ok = rep.degree_failures.empty();
  }
  return rep;
}

ChernoffBounds chernoff_tail(std::uint64_t n, double p, double lambda) {
  const double mu = static_cast<double>(n) * p;
  if (!(mu > 0)) throw std::range_error("chernoff_tail needs np > 0");
  if (!(lambda >= 0) || !(lambda < 1.5 * mu)) throw std::range_error("chernoff_tail needs 0 <= lambda < 3np/2");
  const double delta = lambda / mu;
  return {std::exp(-delta * delta * mu / 2), std::exp(-delta * delta * mu / 3)};
}

ChernoffBand chernoff_band(std::uint64_t n, double p, double failure) {
  if (!(failure > 0 && failure < 1)) throw std::range_error("failure probability must lie in (0, 1)");
  const double mu = static_cast<double>(n) * p;
  const double log_inv = std::log(1 / failure);
  const double below = std::sqrt(2 * mu * log_inv);
  const double above = std::sqrt(3 * mu * log_inv);
  chernoff_tail(n, p, above);  // rejects a band outside the valid range
  return {mu - below, mu + above};
}

}  // namespace hypermatch
