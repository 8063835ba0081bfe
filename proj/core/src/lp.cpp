#include "hypermatch/lp.hpp"

#include <algorithm>
#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/simplex.hpp"

namespace hypermatch {

Rational FractionalAssignment::value() const {
  Rational total = 0;
  for (const auto& [e, x] : weights) total += x;
  return total;
}

Rational FractionalAssignment::load(Vertex v) const {
  Rational total = 0;
  for (const auto& [e, x] : weights)
    if (std::binary_search(e.begin(), e.end(), v)) total += x;
  return total;
}

std::vector<Rational> FractionalAssignment::loads() const {
  std::vector<Rational> out(n, Rational(0));
  for (const auto& [e, x] : weights)
    for (auto v : e)
      if (v >= 1 && v <= n) out[v - 1] += x;
  return out;
}

void FractionalAssignment::prune() {
  std::erase_if(weights, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Rational VertexWeights::total() const {
  Rational s = 0;
  for (const auto& x : w) s += x;
  return s;
}

bool is_fractional_matching(const KGraph& h, const FractionalAssignment& phi) {
  if (phi.n != h.n() || phi.k != h.k()) return false;
  for (const auto& [e, x] : phi.weights) {
    if (sgn(x) < 0 || x > 1) return false;
    if (sgn(x) > 0 && !h.contains(e)) return false;
  }
  for (const auto& load : phi.loads())
    if (load > 1) return false;
  return true;
}

bool is_perfect_fractional_matching(const KGraph& h, const FractionalAssignment& phi) {
  return is_fractional_matching(h, phi) && phi.value() * h.k() == h.n();
}

bool is_fractional_cover(const KGraph& h, const VertexWeights& w) {
  if (w.n() != h.n()) return false;
  for (const auto& x : w.w)
    if (sgn(x) < 0 || x > 1) return false;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    Rational s = 0;
    for (auto v : h.edge(i)) s += w(v);
    if (s < 1) return false;
  }
  return true;
}

FractionalMatchingResult max_fractional_matching(const KGraph& h) {
  // one variable per edge, one row per vertex: sum_{e ∋ v} phi(e) <= 1
  LinearProgram lp;
  lp.num_vars = h.num_edges();
  lp.objective.assign(lp.num_vars, Rational(1));
  lp.rows.resize(h.n());
  lp.rhs.assign(h.n(), Rational(1));
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (auto v : h.edge(i)) lp.rows[v - 1].emplace_back(i, Rational(1));

  const auto sol = solve(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing program must have an optimum");

  FractionalMatchingResult out;
  out.value = sol.value;
  out.phi.n = h.n();
  out.phi.k = h.k();
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (sgn(sol.x[i]) != 0) out.phi.weights.emplace(h.edge_copy(i), sol.x[i]);
  out.certificate.w = sol.dual;
  out.pivots = sol.pivots;
  return out;
}

FractionalCoverResult min_fractional_cover(const KGraph& h) {
  // maximise -sum w subject to -sum_{v in e} w(v) <= -1 for each edge
  LinearProgram lp;
  lp.num_vars = h.n();
  lp.objective.assign(h.n(), Rational(-1));
  lp.rows.resize(h.num_edges());
  lp.rhs.assign(h.num_edges(), Rational(-1));
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (auto v : h.edge(i)) lp.rows[i].emplace_back(v - 1, Rational(-1));

  const auto sol = solve(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("covering program must have an optimum");

  FractionalCoverResult out;
  out.value = -sol.value;
  out.w.w = sol.x;
  out.pivots = sol.pivots;
  return out;
}

DualityReport duality_report(const KGraph& h) {
  const auto packing = max_fractional_matching(h);
  const auto cover = min_fractional_cover(h);
  DualityReport r;
  r.nu_frac = packing.value;
  r.tau_frac = cover.value;
  r.witnesses_valid = is_fractional_matching(h, packing.phi) && packing.phi.value() == packing.value &&
                      is_fractional_cover(h, cover.w) && cover.w.total() == cover.value;
  return r;
}

bool check_duality(const KGraph& h) { return duality_report(h).holds(); }

FractionalAssignment clique_window_matching(std::uint32_t n, std::uint32_t k) {
  if (k == 0 || n <= k) throw ParameterError("window matching needs n > k");
  FractionalAssignment phi;
  phi.n = n;
  phi.k = k;
  const Rational weight(1, k);
  for (std::uint32_t i = 0; i < n; ++i) {
    Edge e(k);
    for (std::uint32_t j = 0; j < k; ++j) e[j] = (i + j) % n + 1;
    std::sort(e.begin(), e.end());
    phi.weights[e] += weight;
  }
  return phi;
}

KGraph weight_closure(std::uint32_t n_total, std::uint32_t k, const VertexWeights& w) {
  if (w.n() != n_total) throw std::invalid_argument("weights must cover every vertex");
  // Order vertices by decreasing weight so a failing prefix prunes whole subtrees.
  std::vector<Vertex> order(n_total);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w(a) > w(b); });
  std::vector<Vertex> flat;
  std::vector<Vertex> pick;
  std::vector<Rational> prefix_sums(n_total + 1);
  for (std::uint32_t i = 0; i < n_total; ++i) prefix_sums[i + 1] = prefix_sums[i] + w(order[i]);

  const auto recurse = [&](auto&& self, std::uint32_t start, const Rational& acc) -> void {
    const auto need = k - static_cast<std::uint32_t>(pick.size());
    if (need == 0) {
      if (acc >= 1) {
        Edge e = pick;
        std::sort(e.begin(), e.end());
        flat.insert(flat.end(), e.begin(), e.end());
      }
      return;
    }
    for (std::uint32_t i = start; i + need <= n_total; ++i) {
      // best completion from i onwards takes order[i .. i+need-1]
      if (acc + prefix_sums[i + need] - prefix_sums[i] < 1) return;
      pick.push_back(order[i]);
      self(self, i + 1, acc + w(order[i]));
      pick.pop_back();
    }
  };
  if (k <= n_total) recurse(recurse, 0, Rational(0));
  return KGraph::from_flat(n_total, k, std::move(flat));
}

std::vector<Vertex> weight_order(const VertexWeights& w, std::uint32_t prefix) {
  if (prefix > w.n()) throw std::invalid_argument("prefix exceeds the vertex count");
  std::vector<Vertex> order(w.n());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.begin() + prefix, [&](Vertex a, Vertex b) { return w(a) > w(b); });
  return order;
}

KGraph apply_order(const KGraph& h, const std::vector<Vertex>& order) {
  if (order.size() != h.n()) throw std::invalid_argument("order must list every vertex");
  std::vector<Vertex> new_label(h.n() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) new_label[order[i]] = static_cast<Vertex>(i + 1);
  std::vector<Vertex> flat;
  flat.reserve(h.flat().size());
  Edge e(h.k());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto old = h.edge(i);
    for (std::uint32_t j = 0; j < h.k(); ++j) e[j] = new_label[old[j]];
    std::sort(e.begin(), e.end());
    flat.insert(flat.end(), e.begin(), e.end());
  }
  return KGraph::from_flat(h.n(), h.k(), std::move(flat));
}

Relabeling relabel_prefix_by_weights(const KGraph& h, const VertexWeights& w, std::uint32_t prefix) {
  if (w.n() != h.n()) throw std::invalid_argument("weights must cover every vertex");
  Relabeling out;
  out.order = weight_order(w, prefix);
  out.graph = apply_order(h, out.order);
  out.weights.w.resize(h.n());
  for (std::size_t i = 0; i < out.order.size(); ++i) out.weights.w[i] = w(out.order[i]);
  return out;
}

Relabeling relabel_by_weights(const KGraph& h, const VertexWeights& w) {
  return relabel_prefix_by_weights(h, w, h.n());
}

}  // namespace hypermatch
