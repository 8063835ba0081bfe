#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hypermatch/kgraph.hpp"
#include "hypermatch/pipeline.hpp"
#include "hypermatch/types.hpp"

namespace hypermatch {

/// Independent random vertex subsets R^i of a host graph, with incidence counts.
struct SampleFamily {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  double keep_probability = 0;
  /// Ascending vertex lists, one per copy, each of size divisible by k.
  std::vector<std::vector<Vertex>> copies;
  /// Copy sizes before trimming to a multiple of k.
  std::vector<std::uint32_t> untrimmed_sizes;
  /// Y_{v}: number of copies containing v, entry v-1.
  std::vector<std::uint32_t> vertex_counts;
  /// pair_histogram[c] = number of vertex pairs lying in exactly c copies, c >= 1.
  std::map<std::uint32_t, std::uint64_t> pair_histogram;
  std::uint32_t max_pair_incidence = 0;
  /// Number of copies containing edge i of the host.
  std::vector<std::uint32_t> edge_counts;
};

/// Draws the copies: every vertex kept independently with the configured
/// probability, then fewer than k kept vertices deleted uniformly at random
/// so that |R| is divisible by k. Copy i uses the sub-seed derive_seed(seed, i).
SampleFamily first_round_sampler(const KGraph& h, const PipelineConfig& cfg);

/// Caller tolerances standing in for the o(1) terms.
struct SamplerThresholds {
  /// |Y_v - mean| <= y_slack * mean.
  double y_slack = 0.5;
  /// ||R^i| - mean| <= size_slack * mean.
  double size_slack = 0.5;
  std::uint32_t max_pair = 2;
  std::uint32_t max_edge = 1;
  /// Per-copy degree check is run only when set.
  std::optional<Rational> rho_prime;
};

struct SamplerReport {
  double expected_y = 0;
  std::uint32_t y_min = 0;
  std::uint32_t y_max = 0;
  double expected_size = 0;
  std::uint32_t size_min = 0;
  std::uint32_t size_max = 0;
  std::uint32_t max_pair = 0;
  std::uint32_t max_edge = 0;
  /// Copies whose induced graph misses the degree bound.
  std::vector<std::size_t> degree_failures;
  bool y_concentrated = false;
  bool pairs_ok = false;
  bool edges_ok = false;
  bool sizes_concentrated = false;
  /// Empty when no rho' was supplied.
  std::optional<bool> degrees_ok;

  bool all() const {
    return y_concentrated && pairs_ok && edges_ok && sizes_concentrated && degrees_ok.value_or(true);
  }
};

/// Measures concentration, overlap and per-copy degree properties of a family built from h.
SamplerReport check_sampler_properties(const SampleFamily& f, const KGraph& h, const SamplerThresholds& t);

struct ChernoffBounds {
  /// exp(-delta^2 mu / 2), bounding P[X <= mu - lambda].
  double lower_tail = 1;
  /// exp(-delta^2 mu / 3), bounding P[X >= mu + lambda].
  double upper_tail = 1;
};

/// Tail bounds for X ~ Bin(n, p) with delta = lambda / (np). Throws
/// std::range_error unless 0 <= lambda < 3np/2 and np > 0.
ChernoffBounds chernoff_tail(std::uint64_t n, double p, double lambda);

struct ChernoffBand {
  double lower = 0;
  double upper = 0;
};

/// [np - l1, np + l2] with each tail bound equal to `failure`.
ChernoffBand chernoff_band(std::uint64_t n, double p, double failure);

}  // namespace hypermatch
