#include "hypermatch/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/diagnostics.hpp"
#include "hypermatch/errors.hpp"

namespace hypermatch {
namespace {

// Ascending k-set of [n] with the given lexicographic rank.
void unrank_lex(std::uint32_t n, std::uint32_t k, std::uint64_t rank, std::vector<Vertex>& out) {
  out.clear();
  Vertex x = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    while (true) {
      const auto count = binomial_u64(n - x, k - i - 1);
      if (rank < count) break;
      rank -= count;
      ++x;
    }
    out.push_back(x);
    ++x;
  }
}

std::uint32_t count_in(std::span<const Vertex> e, const std::vector<char>& mark) {
  std::uint32_t c = 0;
  for (auto v : e) c += mark[v] ? 1U : 0U;
  return c;
}

}  // namespace

void VertexPartition::validate() const {
  const auto total = n();
  std::vector<char> seen(total + 1, 0);
  for (const auto* part : {&u, &w}) {
    for (auto v : *part) {
      if (v < 1 || v > total) throw std::invalid_argument("partition vertex outside [1, n]");
      if (seen[v]) throw std::invalid_argument("partition parts overlap");
      seen[v] = 1;
    }
  }
}

VertexPartition VertexPartition::from_w(std::uint32_t n, std::vector<Vertex> w) {
  std::sort(w.begin(), w.end());
  VertexPartition p{complement(n, w), std::move(w)};
  p.validate();
  return p;
}

Rational beta_upper_bound(std::uint32_t k) {
  BigInt base = 2;
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= k; ++i) f *= i;
  BigInt three_k;
  mpz_ui_pow_ui(three_k.get_mpz_t(), 3, k);
  BigInt k5;
  mpz_ui_pow_ui(k5.get_mpz_t(), k, 5);
  base = three_k * 2 * k5 * f;
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), base.get_mpz_t(), 4);
  return ratio(1, denom);
}

ThresholdSpec ThresholdSpec::make(std::uint32_t n, std::uint32_t k, std::uint32_t m, std::optional<Rational> beta) {
  ThresholdSpec t;
  t.n = n;
  t.k = k;
  t.m = m;
  t.vertex_degree_threshold = hypermatch::vertex_degree_threshold(n, k, m);
  if (std::uint64_t{k} * m <= n) t.erdos_threshold = hypermatch::erdos_threshold(n, k, m);
  if (beta) {
    if (*beta <= 0) throw ParameterError("beta must be positive");
    if (*beta >= beta_upper_bound(k)) warn("beta exceeds the bound 1/(3^k 2 k^5 k!)^4");
  }
  t.beta = std::move(beta);
  return t;
}

KGraph build_hkl(const VertexPartition& p, std::uint32_t k, std::uint32_t l) {
  if (l < 1 || l > k) throw ParameterError("l must lie in [1, k]");
  p.validate();
  const auto n = p.n();
  std::vector<char> in_w(n + 1, 0);
  for (auto v : p.w) in_w[v] = 1;
  std::vector<Vertex> flat;
  for_each_subset(n, k, [&](std::span<const Vertex> e) {
    const auto c = count_in(e, in_w);
    if (c >= 1 && c <= l) flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(n, k, std::move(flat));
}

ExtremalGraph build_hknm(std::uint32_t n, std::uint32_t k, std::uint32_t m) {
  if (k < 2) throw ParameterError("uniformity must be at least 2");
  if (m < 1) throw ParameterError("m must be at least 1");
  if (m - 1 + k > n) throw ParameterError("need m - 1 + k <= n");
  std::vector<Vertex> w(m - 1);
  for (std::uint32_t i = 0; i + 1 < m; ++i) w[i] = i + 1;
  auto partition = VertexPartition::from_w(n, std::move(w));
  auto graph = build_hkl(partition, k, k - 1);
  return {std::move(graph), std::move(partition)};
}

KGraph complete(std::uint32_t n, std::uint32_t k) {
  if (n < k) throw ParameterError("complete graph needs n >= k");
  std::vector<Vertex> flat;
  flat.reserve(binomial_u64(n, k) * k);
  for_each_subset(n, k, [&](std::span<const Vertex> e) {
    flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(n, k, std::move(flat));
}

KGraph join_clique(const KGraph& h, std::uint32_t r) {
  if (r == 0) return h;
  const auto n = h.n();
  const auto total = n + r;
  std::vector<Vertex> flat(h.flat().begin(), h.flat().end());
  for_each_subset(total, h.k(), [&](std::span<const Vertex> e) {
    if (e.back() > n) flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(total, h.k(), std::move(flat));
}

KGraph parity_construction(std::uint32_t a, std::uint32_t b, std::uint32_t k) {
  if (a + b < k) throw ParameterError("parity construction needs a + b >= k");
  if (a % 2 == 0 || (a > b ? a - b : b - a) > 2)
    warn("parity construction expects |a - b| <= 2 and a odd");
  std::vector<char> in_a(a + b + 1, 0);
  for (Vertex v = 1; v <= a; ++v) in_a[v] = 1;
  std::vector<Vertex> flat;
  for_each_subset(a + b, k, [&](std::span<const Vertex> e) {
    if (count_in(e, in_a) % 2 == 0) flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(a + b, k, std::move(flat));
}

KGraph space_barrier(std::uint32_t n, std::uint32_t k) {
  if (k == 0 || n % k != 0) throw ParameterError("space barrier needs k | n");
  if (n < k) throw ParameterError("space barrier needs n >= k");
  const auto core = n - n / k + 1;
  std::vector<Vertex> flat;
  for_each_subset(n, k, [&](std::span<const Vertex> e) {
    if (e.back() > core) flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(n, k, std::move(flat));
}

BigInt vertex_degree_threshold(std::uint32_t n, std::uint32_t k, std::uint32_t m) {
  if (m < 1) throw ParameterError("m must be at least 1");
  if (k < 1 || std::uint64_t{n} < std::uint64_t{m} + k - 1) throw ParameterError("need n >= m + k - 1");
  return binomial(n - 1, k - 1) - binomial(static_cast<long>(n) - m, k - 1);
}

BigInt erdos_threshold(std::uint32_t n, std::uint32_t k, std::uint32_t m) {
  if (m < 1 || k < 1) throw ParameterError("m and k must be positive");
  if (std::uint64_t{k} * m > n) throw ParameterError("need km <= n");
  BigInt a = binomial(static_cast<long>(k) * m - 1, k);
  BigInt b = binomial(n, k) - binomial(static_cast<long>(n) - m + 1, k);
  return (a > b ? a : b) + 1;
}

Rational l_degree_conjectured_fraction(std::uint32_t k, std::uint32_t l) {
  if (l < 1 || l >= k) throw ParameterError("need 1 <= l < k");
  Rational base(k - 1, k);
  Rational power = 1;
  for (std::uint32_t i = 0; i < k - l; ++i) power *= base;
  Rational second = 1 - power;
  Rational half(1, 2);
  return second > half ? second : half;
}

KGraph random_kgraph(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  if (k == 0) throw ParameterError("uniformity must be positive");
  if (p == 0.0 || n < k) return KGraph(n, k);
  if (p == 1.0) return complete(n, k);
  Rng rng(seed);
  std::vector<Vertex> flat;
  const auto total = binomial_u64(n, k);
  if (p >= 0.1) {
    for_each_subset(n, k, [&](std::span<const Vertex> e) {
      if (uniform01(rng) < p) flat.insert(flat.end(), e.begin(), e.end());
      return true;
    });
  } else {
    // geometric skips over lexicographic ranks
    const double log_q = std::log1p(-p);
    std::vector<Vertex> e;
    std::uint64_t rank = 0;
    while (true) {
      const double u = 1.0 - uniform01(rng);
      const double gap = std::floor(std::log(u) / log_q);
      if (gap >= static_cast<double>(total - rank)) break;
      rank += static_cast<std::uint64_t>(gap);
      if (rank >= total) break;
      unrank_lex(n, k, rank, e);
      flat.insert(flat.end(), e.begin(), e.end());
      ++rank;
    }
  }
  return KGraph::from_flat(n, k, std::move(flat));
}

ConditionedSample random_kgraph_conditioned(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                            std::optional<BigInt> floor, std::uint64_t tries,
                                            std::uint64_t seed) {
  const BigInt target = floor ? *floor : vertex_degree_threshold(n, k, m) + 1;
  const BigInt full = binomial(n - 1, k - 1);
  ConditionedSample out;
  if (target > full) {
    out.tries_used = 0;
    return out;
  }
  const double p_lo = full == 0 ? 1.0 : std::clamp(Rational(target, full).get_d(), 0.0, 1.0);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < tries; ++t) {
    const double p = p_lo + (1.0 - p_lo) * uniform01(rng);
    auto g = random_kgraph(n, k, p, rng());
    out.tries_used = t + 1;
    if (BigInt(static_cast<unsigned long>(min_l_degree(g, 1))) >= target) {
      out.graph = std::move(g);
      return out;
    }
  }
  return out;
}

KGraph random_planted(std::uint32_t n, std::uint32_t k, std::uint32_t m, double keep, double extra,
                      std::uint64_t seed) {
  if (!(keep >= 0.0 && keep <= 1.0 && extra >= 0.0 && extra <= 1.0))
    throw ParameterError("probabilities must lie in [0, 1]");
  if (m < 1 || m - 1 + k > n) throw ParameterError("need 1 <= m and m - 1 + k <= n");
  std::vector<char> in_w(n + 1, 0);
  for (Vertex v = 1; v < m; ++v) in_w[v] = 1;
  Rng rng(seed);
  std::vector<Vertex> flat;
  for_each_subset(n, k, [&](std::span<const Vertex> e) {
    const auto c = count_in(e, in_w);
    const bool templ = c >= 1 && c <= k - 1;
    if (uniform01(rng) < (templ ? keep : extra)) flat.insert(flat.end(), e.begin(), e.end());
    return true;
  });
  return KGraph::from_flat(n, k, std::move(flat));
}

}  // namespace hypermatch
