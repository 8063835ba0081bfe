#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace hypermatch::detail {

// Fixed-width vertex set used by the exponential searches. Bit v-1 is vertex v.
template <std::size_t Words>
struct FixedBits {
  std::array<std::uint64_t, Words> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool intersects(const FixedBits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  bool subset_of(const FixedBits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] |= o.w[i];
    return *this;
  }
  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] &= o.w[i];
    return *this;
  }
  FixedBits without(const FixedBits& o) const {
    FixedBits r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      auto x = w[i];
      while (x) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

// Calls fn.template operator()<Words>() with the smallest width covering n bits.
template <typename F>
decltype(auto) dispatch_width(std::size_t n, F&& fn) {
  if (n <= 64) return fn.template operator()<1>();
  if (n <= 128) return fn.template operator()<2>();
  if (n <= 256) return fn.template operator()<4>();
  throw std::invalid_argument("exact search supports at most 256 vertices");
}

}  // namespace hypermatch::detail
