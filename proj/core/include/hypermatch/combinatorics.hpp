#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "hypermatch/types.hpp"

namespace hypermatch {

/// Exact binomial coefficient; zero when k < 0 or k > n or n < 0.
BigInt binomial(long n, long k);

/// Binomial coefficient in 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

/// Calls fn for every k-subset of [1, n] in lexicographic order. fn returns
/// false to stop early.
void for_each_subset(std::uint32_t n, std::uint32_t k,
                     const std::function<bool(std::span<const Vertex>)>& fn);

/// Same, over the k-subsets of an explicit ascending ground set.
void for_each_subset_of(std::span<const Vertex> ground, std::uint32_t k,
                        const std::function<bool(std::span<const Vertex>)>& fn);

/// Seeded generator used everywhere randomness appears.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits; stable across platforms.
double uniform01(Rng& rng);

/// Bernoulli trial with an exact rational success probability in [0, 1].
bool bernoulli(Rng& rng, const Rational& p);

/// Uniform integer in [0, bound) without modulo bias.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Deterministic sub-seed for stream `index` derived from `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hypermatch
