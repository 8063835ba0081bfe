#include "hypermatch/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace hypermatch {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dictionary: basic[i] = rhs[i] - sum_j coef[i][j] * nonbasic[j];
// z = z0 + sum_j obj[j] * nonbasic[j].
class Dictionary {
 public:
  Dictionary(const LinearProgram& lp, bool with_aux) {
    const auto m = lp.rows.size();
    const auto n = lp.num_vars;
    cols_ = n + (with_aux ? 1 : 0);
    coef_.assign(m, std::vector<Rational>(cols_));
    rhs_ = lp.rhs;
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [j, a] : lp.rows[i]) coef_[i][j] += a;
      if (with_aux) coef_[i][n] = -1;
    }
    nonbasic_.resize(cols_);
    for (std::size_t j = 0; j < n; ++j) nonbasic_[j] = j;
    if (with_aux) nonbasic_[n] = aux_id(n, m);
    basic_.resize(m);
    for (std::size_t i = 0; i < m; ++i) basic_[i] = n + i;
    obj_.assign(cols_, Rational(0));
  }

  static std::size_t aux_id(std::size_t n, std::size_t m) { return n + m; }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    const Rational a = coef_[r][s];
    const Rational inv = 1 / a;
    auto& row = coef_[r];
    rhs_[r] *= inv;
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != s && sgn(row[j]) != 0) row[j] *= inv;
    row[s] = inv;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (i == r) continue;
      const Rational c = coef_[i][s];
      if (sgn(c) == 0) continue;
      rhs_[i] -= c * rhs_[r];
      auto& other = coef_[i];
      for (std::size_t j = 0; j < cols_; ++j)
        if (j != s && sgn(row[j]) != 0) other[j] -= c * row[j];
      other[s] = -c * inv;
    }
    const Rational d = obj_[s];
    if (sgn(d) != 0) {
      z0_ += d * rhs_[r];
      for (std::size_t j = 0; j < cols_; ++j)
        if (j != s && sgn(row[j]) != 0) obj_[j] -= d * row[j];
      obj_[s] = -d * inv;
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland: lowest-index improving variable enters; ratio ties go to the
  // lowest-index basic variable.
  enum class Step { optimal, unbounded, pivoted };
  Step step() {
    std::size_t s = kNone;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(obj_[j]) > 0 && (s == kNone || nonbasic_[j] < nonbasic_[s])) s = j;
    if (s == kNone) return Step::optimal;
    std::size_t r = kNone;
    Rational best;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (sgn(coef_[i][s]) <= 0) continue;
      Rational ratio = rhs_[i] / coef_[i][s];
      if (r == kNone || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == kNone) return Step::unbounded;
    pivot(r, s);
    return Step::pivoted;
  }

  Step run() {
    while (true) {
      auto st = step();
      if (st != Step::pivoted) return st;
    }
  }

  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> rhs_;
  std::vector<Rational> obj_;
  Rational z0_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::size_t cols_ = 0;
  std::uint64_t pivots_ = 0;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  const auto n = lp.num_vars;
  const auto m = lp.rows.size();
  if (lp.objective.size() != n || lp.rhs.size() != m) throw std::invalid_argument("malformed linear program");

  bool needs_phase1 = false;
  for (const auto& b : lp.rhs)
    if (sgn(b) < 0) needs_phase1 = true;

  Dictionary dict(lp, needs_phase1);
  LpSolution sol;

  if (needs_phase1) {
    const auto aux = Dictionary::aux_id(n, m);
    // maximise -x0; x0 enters on the most negative row
    dict.obj_[n] = -1;
    std::size_t r = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (dict.rhs_[i] < dict.rhs_[r]) r = i;
    dict.pivot(r, n);
    dict.run();
    if (sgn(dict.z0_) < 0) {
      sol.status = LpStatus::infeasible;
      sol.pivots = dict.pivots_;
      return sol;
    }
    // drive x0 out of the basis if it stayed at level zero
    for (std::size_t i = 0; i < m; ++i) {
      if (dict.basic_[i] != aux) continue;
      std::size_t s = kNone;
      for (std::size_t j = 0; j < dict.cols_; ++j)
        if (sgn(dict.coef_[i][j]) != 0 && (s == kNone || dict.nonbasic_[j] < dict.nonbasic_[s])) s = j;
      if (s != kNone) {
        dict.pivot(i, s);
      } else {
        // x0 is identically zero on this row: the row carries no constraint
        dict.coef_.erase(dict.coef_.begin() + static_cast<std::ptrdiff_t>(i));
        dict.rhs_.erase(dict.rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        dict.basic_.erase(dict.basic_.begin() + static_cast<std::ptrdiff_t>(i));
      }
      break;
    }
    // drop the x0 column
    std::size_t col = kNone;
    for (std::size_t j = 0; j < dict.cols_; ++j)
      if (dict.nonbasic_[j] == aux) col = j;
    if (col != kNone) {
      for (auto& row : dict.coef_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
      dict.nonbasic_.erase(dict.nonbasic_.begin() + static_cast<std::ptrdiff_t>(col));
      dict.cols_ -= 1;
    }
    // rewrite the true objective over the current nonbasic variables
    dict.obj_.assign(dict.cols_, Rational(0));
    dict.z0_ = 0;
    for (std::size_t j = 0; j < dict.cols_; ++j)
      if (dict.nonbasic_[j] < n) dict.obj_[j] += lp.objective[dict.nonbasic_[j]];
    for (std::size_t i = 0; i < dict.basic_.size(); ++i) {
      const auto var = dict.basic_[i];
      if (var >= n || sgn(lp.objective[var]) == 0) continue;
      const Rational& c = lp.objective[var];
      dict.z0_ += c * dict.rhs_[i];
      for (std::size_t j = 0; j < dict.cols_; ++j)
        if (sgn(dict.coef_[i][j]) != 0) dict.obj_[j] -= c * dict.coef_[i][j];
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) dict.obj_[j] = lp.objective[j];
  }

  if (dict.run() == Dictionary::Step::unbounded) {
    sol.status = LpStatus::unbounded;
    sol.pivots = dict.pivots_;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.value = dict.z0_;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < dict.basic_.size(); ++i)
    if (dict.basic_[i] < n) sol.x[dict.basic_[i]] = dict.rhs_[i];
  sol.dual.assign(m, Rational(0));
  for (std::size_t j = 0; j < dict.cols_; ++j) {
    const auto var = dict.nonbasic_[j];
    if (var >= n && var < n + m) sol.dual[var - n] = -dict.obj_[j];
  }
  sol.pivots = dict.pivots_;
  return sol;
}

}  // namespace hypermatch
