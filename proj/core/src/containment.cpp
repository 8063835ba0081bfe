#include "hypermatch/containment.hpp"

#include <algorithm>
#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/errors.hpp"

namespace hypermatch {
namespace {

BigInt pow_int(std::uint32_t base, std::uint32_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt template_size(std::uint32_t k, std::uint32_t l, std::size_t u, std::size_t w) {
  BigInt total = 0;
  for (std::uint32_t j = 1; j <= l; ++j) total += binomial(static_cast<long>(w), j) * binomial(static_cast<long>(u), k - j);
  return total;
}

// Edges of H with 1 <= |e & W| <= l.
std::uint64_t template_edges_present(const KGraph& h, const std::vector<char>& in_w, std::uint32_t l) {
  std::uint64_t present = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::uint32_t c = 0;
    for (auto v : h.edge(i)) c += in_w[v] ? 1U : 0U;
    if (c >= 1 && c <= l) ++present;
  }
  return present;
}

BigInt deficiency_for(const KGraph& h, const std::vector<Vertex>& w, std::uint32_t l) {
  std::vector<char> in_w(h.n() + 1, 0);
  for (auto v : w) in_w[v] = 1;
  const BigInt total = template_size(h.k(), l, h.n() - w.size(), w.size());
  return total - BigInt(static_cast<unsigned long>(template_edges_present(h, in_w, l)));
}

}  // namespace

BigInt deficiency(const KGraph& h, const VertexPartition& p, std::uint32_t l) {
  if (p.n() != h.n()) throw std::invalid_argument("partition does not match the vertex set");
  if (l < 1 || l > h.k()) throw ParameterError("l must lie in [1, k]");
  p.validate();
  return deficiency_for(h, p.w, l);
}

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::automatic: return "auto";
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::local: return "local-search";
  }
  return "?";
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "auto") return SearchMode::automatic;
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "local" || text == "local-search") return SearchMode::local;
  throw ParameterError("unknown search mode: " + text);
}

ContainmentReport eps_contains(const KGraph& h, std::uint32_t m, const Rational& eps, SearchMode mode) {
  if (m < 1) throw ParameterError("m must be at least 1");
  if (m - 1 > h.n()) throw ParameterError("|W| = m - 1 exceeds n");
  const auto n = h.n();
  const auto k = h.k();
  const std::uint32_t l = k - 1;
  const auto wsize = m - 1;

  if (mode == SearchMode::automatic) {
    const BigInt count = binomial(n, wsize);
    mode = count <= BigInt(static_cast<unsigned long>(kExhaustiveBudget)) ? SearchMode::exhaustive : SearchMode::local;
  }

  ContainmentReport report;
  report.epsilon = eps;
  report.epsilon_bound = eps * Rational(pow_int(n, k));
  report.search_mode = mode;

  std::vector<Vertex> best_w;
  BigInt best;
  bool have = false;

  if (mode == SearchMode::exhaustive) {
    for_each_subset(n, wsize, [&](std::span<const Vertex> w) {
      std::vector<Vertex> cand(w.begin(), w.end());
      auto d = deficiency_for(h, cand, l);
      ++report.partitions_examined;
      if (!have || d < best) {
        best = d;
        best_w = std::move(cand);
        have = true;
      }
      return true;
    });
  } else {
    const auto deg = h.vertex_degrees();
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 1);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return deg[a - 1] > deg[b - 1]; });
    best_w.assign(by_degree.begin(), by_degree.begin() + wsize);
    std::sort(best_w.begin(), best_w.end());
    best = deficiency_for(h, best_w, l);
    ++report.partitions_examined;
    have = true;
    bool improved = true;
    while (improved) {
      improved = false;
      const auto u_side = complement(n, best_w);
      for (auto u : u_side) {
        for (std::size_t wi = 0; wi < best_w.size() && !improved; ++wi) {
          auto cand = best_w;
          cand[wi] = u;
          std::sort(cand.begin(), cand.end());
          auto d = deficiency_for(h, cand, l);
          ++report.partitions_examined;
          if (d < best) {
            best = d;
            best_w = std::move(cand);
            improved = true;
          }
        }
        if (improved) break;
      }
    }
  }

  report.partition = VertexPartition::from_w(n, best_w);
  report.deficiency = best;
  report.satisfied = Rational(best) <= report.epsilon_bound;
  return report;
}

bool RootBound::admits(const BigInt& value, const BigInt& scale) const {
  if (sgn(radicand) < 0) return false;
  if (degree <= 1) return Rational(value) <= radicand * Rational(scale);
  BigInt lhs, rhs_scale;
  mpz_pow_ui(lhs.get_mpz_t(), value.get_mpz_t(), degree);
  mpz_pow_ui(rhs_scale.get_mpz_t(), scale.get_mpz_t(), degree);
  return Rational(lhs) <= radicand * Rational(rhs_scale);
}

GoodBadSplit classify_good_bad(const KGraph& h, const VertexPartition& p, std::uint32_t l, const RootBound& theta) {
  const auto k = h.k();
  if (!(l >= 1 && (l + 1 == k || l + 2 == k))) throw ParameterError("goodness is defined for l in {k-2, k-1} only");
  if (p.n() != h.n()) throw std::invalid_argument("partition does not match the vertex set");
  p.validate();
  const auto n = h.n();
  std::vector<char> in_w(n + 1, 0);
  for (auto v : p.w) in_w[v] = 1;
  const long wsize = static_cast<long>(p.w.size());
  const long usize = static_cast<long>(p.u.size());

  // template degree of a W vertex: (k-1)-sets T with 0 <= |T & W| <= l-1
  BigInt deg_w = 0;
  for (std::uint32_t j = 0; j + 1 <= l; ++j) deg_w += binomial(wsize - 1, j) * binomial(usize, k - 1 - j);
  // template degree of a U vertex: (k-1)-sets T with 1 <= |T & W| <= l
  BigInt deg_u = 0;
  for (std::uint32_t j = 1; j <= l; ++j) deg_u += binomial(wsize, j) * binomial(usize - 1, k - 1 - j);

  std::vector<std::uint64_t> present(n + 1, 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    std::uint32_t c = 0;
    for (auto v : e) c += in_w[v] ? 1U : 0U;
    if (c >= 1 && c <= l)
      for (auto v : e) ++present[v];
  }

  const BigInt scale = pow_int(n, k - 1);
  GoodBadSplit out;
  out.deficit.resize(n);
  for (Vertex v = 1; v <= n; ++v) {
    out.deficit[v - 1] = (in_w[v] ? deg_w : deg_u) - BigInt(static_cast<unsigned long>(present[v]));
    (theta.admits(out.deficit[v - 1], scale) ? out.good : out.bad).push_back(v);
  }
  return out;
}

DensityReport subset_density_check(const KGraph& h, std::uint32_t m, const Rational& eps, std::uint64_t samples,
                                   std::uint64_t seed, std::optional<Rational> varrho, std::size_t max_stored) {
  const auto n = h.n();
  const auto k = h.k();
  DensityReport r;
  const Rational min_size = (1 - ratio(m, n == 0 ? 1 : n) - eps / 7) * n;
  BigInt s0 = ceil(min_size);
  if (s0 < 0) s0 = 0;
  if (s0 > n) s0 = n;
  r.subset_size = static_cast<std::uint32_t>(s0.get_ui());
  r.edge_floor = eps * Rational(pow_int(n, k)) / (2 * k * k);
  r.parameters_in_range = sgn(eps) > 0 && eps < ratio(1, k) && ratio(n, 2 * k * k * k * k) <= m &&
                          std::uint64_t{m} * k < n;
  if (varrho) r.varrho_in_range = sgn(*varrho) > 0 && *varrho < eps / 12;

  const auto s = r.subset_size;
  std::vector<char> in_s(n + 1, 0);
  const auto check = [&](std::span<const Vertex> set) {
    for (auto v : set) in_s[v] = 1;
    std::uint64_t inside = 0;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      const auto e = h.edge(i);
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in_s[v] != 0; })) ++inside;
    }
    for (auto v : set) in_s[v] = 0;
    ++r.sets_checked;
    if (Rational(static_cast<unsigned long>(inside)) < r.edge_floor) {
      ++r.violations;
      if (r.violating_sets.size() < max_stored) r.violating_sets.emplace_back(set.begin(), set.end());
    }
  };

  r.exhaustive = binomial(n, s) <= BigInt(static_cast<unsigned long>(kExhaustiveBudget));
  if (r.exhaustive) {
    for_each_subset(n, s, [&](std::span<const Vertex> set) {
      check(set);
      return true;
    });
  } else {
    Rng rng(seed);
    std::vector<Vertex> pool(n);
    for (std::uint64_t t = 0; t < samples; ++t) {
      std::iota(pool.begin(), pool.end(), 1);
      for (std::uint32_t i = 0; i < s; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
      std::vector<Vertex> set(pool.begin(), pool.begin() + s);
      std::sort(set.begin(), set.end());
      check(set);
    }
  }
  return r;
}

}  // namespace hypermatch
