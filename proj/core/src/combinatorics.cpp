#include "hypermatch/combinatorics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "hypermatch/errors.hpp"

namespace hypermatch {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParameterError("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ParameterError("malformed rational: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string denom = "1" + std::string(s.size() - dot - 1, '0');
    if (digits.empty() || digits == "-") digits += "0";
    Rational q;
    if (q.set_str(digits + "/" + denom, 10) != 0) throw ParameterError("malformed rational: " + s);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParameterError("malformed rational: " + s);
  if (q.get_den() == 0) throw ParameterError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::uint64_t to_u64(const BigInt& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw std::overflow_error("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

void for_each_subset_of(std::span<const Vertex> ground, std::uint32_t k,
                        const std::function<bool(std::span<const Vertex>)>& fn) {
  const std::size_t n = ground.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> cur(k);
  while (true) {
    for (std::uint32_t i = 0; i < k; ++i) cur[i] = ground[idx[i]];
    if (!fn(cur)) return;
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_subset(std::uint32_t n, std::uint32_t k,
                     const std::function<bool(std::span<const Vertex>)>& fn) {
  std::vector<Vertex> ground(n);
  for (std::uint32_t i = 0; i < n; ++i) ground[i] = i + 1;
  for_each_subset_of(ground, k, fn);
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool bernoulli(Rng& rng, const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  if (mpz_sizeinbase(p.get_den_mpz_t(), 2) <= 63) {
    const auto den = to_u64(BigInt(p.get_den()));
    const auto num = to_u64(BigInt(p.get_num()));
    return uniform_below(rng, den) < num;
  }
  return uniform01(rng) < p.get_d();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hypermatch
