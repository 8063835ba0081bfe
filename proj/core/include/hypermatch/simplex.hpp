#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypermatch/types.hpp"

namespace hypermatch {

/// maximize c.x subject to A x <= b, x >= 0, over exact rationals.
/// Rows are sparse: (column, coefficient) pairs.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<Rational> rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;     // primal, one per variable
  std::vector<Rational> dual;  // one per row; feasible for the dual at optimum
  std::uint64_t pivots = 0;
};

/// Two-phase dictionary simplex with Bland's rule. Deterministic: the same
/// program always yields the same basic optimum.
LpSolution solve(const LinearProgram& lp);

}  // namespace hypermatch
