#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/constructions.hpp"
#include "hypermatch/kgraph.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

/// |E(H_{k,l}(U, W)) \ E(H)|, counted by strata of |e & W| without building
/// the template.
BigInt deficiency(const KGraph& h, const VertexPartition& p, std::uint32_t l);

enum class SearchMode { automatic, exhaustive, local };

const char* to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& text);

/// Partitions checked exhaustively when C(n, m-1) is at most this.
inline constexpr std::uint64_t kExhaustiveBudget = 1'000'000ULL;

struct ContainmentReport {
  VertexPartition partition;
  BigInt deficiency;
  Rational epsilon;
  /// eps * n^k.
  Rational epsilon_bound;
  bool satisfied = false;
  /// The mode actually used: exhaustive or local.
  SearchMode search_mode = SearchMode::exhaustive;
  std::uint64_t partitions_examined = 0;
};

/// Does H eps-contain H_k(n, m)? Minimises the deficiency over |W| = m-1:
/// exhaustively when affordable (or forced), otherwise from the m-1 highest
/// degree vertices with first-improvement swaps.
ContainmentReport eps_contains(const KGraph& h, std::uint32_t m, const Rational& eps,
                               SearchMode mode = SearchMode::automatic);

/// A threshold of the form radicand^(1/degree), compared exactly.
struct RootBound {
  Rational radicand;
  unsigned degree = 1;

  RootBound() = default;
  RootBound(Rational value) : radicand(std::move(value)) {}  // NOLINT: implicit on purpose
  RootBound(Rational r, unsigned d) : radicand(std::move(r)), degree(d) {}

  /// True iff value <= radicand^(1/degree) * scale, for value, scale >= 0.
  bool admits(const BigInt& value, const BigInt& scale) const;
};

struct GoodBadSplit {
  std::vector<Vertex> good;
  std::vector<Vertex> bad;
  /// deficit[v-1] = |N_template(v) \ N_H(v)|.
  std::vector<BigInt> deficit;
};

/// theta-good / theta-bad vertices against H_{k,l}(U, W): v is bad when its
/// template neighbourhood deficit exceeds theta * n^(k-1). Only l in
/// {k-2, k-1} is accepted.
GoodBadSplit classify_good_bad(const KGraph& h, const VertexPartition& p, std::uint32_t l,
                               const RootBound& theta);

struct DensityReport {
  std::uint32_t subset_size = 0;
  /// eps n^k / (2 k^2).
  Rational edge_floor;
  bool exhaustive = false;
  std::uint64_t sets_checked = 0;
  std::uint64_t violations = 0;
  /// Up to max_stored violating sets, in the order found.
  std::vector<std::vector<Vertex>> violating_sets;
  /// 0 < eps < 1/k and n/(2k^4) <= m < n/k.
  bool parameters_in_range = false;
  /// 0 < varrho < eps/12, when a varrho was supplied.
  std::optional<bool> varrho_in_range;
};

/// Looks for sets S with |S| >= (1 - m/n - eps/7) n and e(H[S]) < eps n^k / (2k^2).
/// Only sets of the minimum size are tested: removing vertices never adds
/// edges, so a larger violator contains a minimum-size one.
DensityReport subset_density_check(const KGraph& h, std::uint32_t m, const Rational& eps,
                                   std::uint64_t samples, std::uint64_t seed,
                                   std::optional<Rational> varrho = std::nullopt,
                                   std::size_t max_stored = 1000);

}  // namespace hypermatch
