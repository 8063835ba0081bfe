#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hypermatch {

/// Vertices are 1-based labels in [1, n].
using Vertex = std::uint32_t;

/// A k-set stored in ascending order.
using Edge = std::vector<Vertex>;

using BigInt = mpz_class;
using Rational = mpq_class;

/// num / den in canonical form. mpq_class(num, den) alone does not reduce.
Rational ratio(const BigInt& num, const BigInt& den);

/// Parses "p/q", an integer, or a plain decimal ("0.125") into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// The smallest integer >= q.
BigInt ceil(const Rational& q);
/// The largest integer <= q.
BigInt floor(const Rational& q);

/// Converts a nonnegative BigInt that fits into 64 bits; throws otherwise.
std::uint64_t to_u64(const BigInt& z);

}  // namespace hypermatch
