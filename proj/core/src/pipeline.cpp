#include "hypermatch/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include <json.hpp>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/containment.hpp"
#include "hypermatch/diagnostics.hpp"
#include "hypermatch/errors.hpp"

namespace hypermatch {
namespace {

using Clock = std::chrono::steady_clock;

BigInt pow_int(std::uint32_t base, std::uint32_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt factorial(std::uint32_t k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

std::string join(const std::vector<Vertex>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string edges_text(const Matching& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.edges.size(); ++i) out += (i ? "," : "") + join(m.edges[i]);
  return out + "]";
}

class StepTimer {
 public:
  StepTimer(PipelineTrace& trace, std::string name) : trace_(trace), start_(Clock::now()) {
    trace_.steps.push_back({std::move(name), "ok", {}, 0});
  }
  ~StepTimer() { step().millis = std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }
  StepTimer(const StepTimer&) = delete;
  StepTimer& operator=(const StepTimer&) = delete;

  TraceStep& step() { return trace_.steps.back(); }
  void add(std::string key, std::string value) { step().details.emplace_back(std::move(key), std::move(value)); }
  void status(std::string s) { step().status = std::move(s); }

 private:
  PipelineTrace& trace_;
  Clock::time_point start_;
};

[[noreturn]] void fail_step(PipelineTrace& trace, const std::string& step, const std::string& what) {
  throw StepFailure(step, what, trace.to_json());
}

// Route of the link matching: m edges of G' completed by distinct fresh
// vertices of [n].
std::optional<Matching> extend_by_fresh(const KGraph& g, std::vector<Edge> fixed, const std::vector<Edge>& partial,
                                        std::uint32_t n) {
  std::vector<char> used(n + 1, 0);
  for (const auto& e : fixed)
    for (auto v : e) used[v] = 1;
  for (const auto& e : partial)
    for (auto v : e) used[v] = 1;
  Matching out;
  out.edges = std::move(fixed);
  Vertex next = 1;
  for (const auto& f : partial) {
    while (next <= n && used[next]) ++next;
    if (next > n) return std::nullopt;
    Edge e = f;
    e.push_back(next);
    std::sort(e.begin(), e.end());
    used[next] = 1;
    if (!g.contains(e))
      throw InternalContradiction("link-extension", "link edge " + join(f) + " does not extend by vertex " + std::to_string(next));
    out.edges.push_back(std::move(e));
  }
  return out;
}

std::optional<Matching> exact_route(const KGraph& g, const KGraph& g_link, std::uint32_t m, const PipelineConfig& cfg,
                                    StepTimer& t) {
  const auto res = exact_nu(g_link, {cfg.node_budget, false});
  t.add("exact.link_nu", std::to_string(res.nu));
  t.add("exact.complete", res.complete ? "true" : "false");
  if (res.nu < m) return std::nullopt;
  std::vector<Edge> first(res.matching.edges.begin(), res.matching.edges.begin() + m);
  return extend_by_fresh(g, {}, first, g.n());
}

std::optional<Matching> greedy_route(const KGraph& g, const KGraph& g_link, std::uint32_t m, std::uint32_t block,
                                     const PipelineConfig& cfg, StepTimer& t) {
  const auto n = g.n();
  const auto k = g.k();
  std::vector<Vertex> w(m - 1);
  std::iota(w.begin(), w.end(), 1);
  const auto part = VertexPartition::from_w(n - 1, w);

  // sqrt(rho)-containment of the link in H_{k-1,k-1}(U, W), compared squared
  const BigInt def = deficiency(g_link, part, k - 1);
  const BigInt scale = pow_int(n - 1, k - 1);
  t.add("greedy.link_deficiency", to_string(def));
  t.add("greedy.sqrt_rho_contains", Rational(def * def) <= cfg.rho * Rational(scale * scale) ? "true" : "false");

  const auto split = classify_good_bad(g_link, part, k - 2, RootBound(cfg.rho, 4));
  std::vector<Vertex> b_bad;
  for (auto v : split.bad)
    if (v < m) b_bad.push_back(v);
  const auto b = static_cast<std::uint32_t>(b_bad.size());
  t.add("greedy.bad_vertices", join(split.bad));
  t.add("greedy.b", std::to_string(b));

  std::vector<Vertex> s1 = b_bad;
  for (Vertex v = m; v <= std::min<std::uint32_t>(block, n); ++v) s1.push_back(v);
  t.add("greedy.s1_size", std::to_string(s1.size()));
  if (std::uint64_t{b + 1} * k > s1.size()) {
    t.add("greedy.failure", "S_1 cannot hold b+1 disjoint k-sets");
    return std::nullopt;
  }
  std::vector<Edge> m21;
  for (std::uint32_t i = 0; i <= b; ++i) {
    Edge e(s1.begin() + i * k, s1.begin() + (i + 1) * k);
    std::sort(e.begin(), e.end());
    if (!g.contains(e)) {
      t.add("greedy.failure", "S_1 is not complete in G");
      return std::nullopt;
    }
    m21.push_back(std::move(e));
  }

  std::vector<char> blocked(n + 1, 0);
  for (const auto& e : m21)
    for (auto v : e) blocked[v] = 1;
  for (auto v : split.bad) blocked[v] = 1;
  std::vector<char> in_w(n + 1, 0);
  for (auto v : w) in_w[v] = 1;
  std::vector<Edge> m22;
  for (auto x : w) {
    if (blocked[x]) continue;  // x in B_bad
    bool found = false;
    for (std::size_t i = 0; i < g_link.num_edges() && !found; ++i) {
      const auto e = g_link.edge(i);
      if (!std::binary_search(e.begin(), e.end(), x)) continue;
      if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return blocked[v] || (v != x && in_w[v]); })) continue;
      for (auto v : e) blocked[v] = 1;
      m22.emplace_back(e.begin(), e.end());
      found = true;
    }
    if (!found) {
      t.add("greedy.failure", "no one-W-vertex edge for vertex " + std::to_string(x));
      return std::nullopt;
    }
  }
  t.add("greedy.m21", std::to_string(m21.size()));
  t.add("greedy.m22", std::to_string(m22.size()));
  return extend_by_fresh(g, std::move(m21), m22, n);
}

}  // namespace

const char* to_string(Route route) {
  switch (route) {
    case Route::automatic: return "auto";
    case Route::exact: return "exact";
    case Route::greedy: return "greedy";
  }
  return "?";
}

Route parse_route(const std::string& text) {
  if (text == "auto") return Route::automatic;
  if (text == "exact") return Route::exact;
  if (text == "greedy") return Route::greedy;
  throw ParameterError("unknown route: " + text);
}

void PipelineConfig::validate() const {
  if (sgn(eta) <= 0) throw ParameterError("eta must be positive");
  if (sgn(eps) <= 0 || eps >= 1) throw ParameterError("eps must lie in (0, 1)");
  if (sgn(rho) < 0) throw ParameterError("rho must be nonnegative");
  if (sgn(beta) < 0) throw ParameterError("beta must be nonnegative");
  if (sgn(sampler.p_exponent) <= 0 || sampler.p_exponent >= 1) throw ParameterError("p_exponent must lie in (0, 1)");
  if (sampler.copy_exponent <= 1 || sampler.copy_exponent >= 2)
    throw ParameterError("copy_exponent must lie in (1, 2)");
  if (sampler.keep_probability && (sgn(*sampler.keep_probability) < 0 || *sampler.keep_probability > 1))
    throw ParameterError("keep_probability must lie in [0, 1]");
  if (rho_prime && *rho_prime < 2 * rho) throw ParameterError("rho_prime must be at least 2 rho");
  nibble.validate();
}

Augmentation build_augmented(const KGraph& h, std::uint32_t m, const Rational& eta) {
  if (sgn(eta) < 0) throw ParameterError("eta must be nonnegative");
  const auto n = static_cast<long long>(h.n());
  const auto k = static_cast<long long>(h.k());
  if (k < 2) throw ParameterError("augmentation needs k >= 2");
  const auto eta_n = static_cast<long long>(to_u64(ceil(eta * Rational(static_cast<long>(n)))));
  const long long slack = n - k * m - eta_n;
  if (slack < 0)
    throw InfeasibleAugmentation("n - km - ceil(eta n) = " + std::to_string(slack) + " < 0");
  const long long r = (slack + k - 2) / (k - 1);
  if (eta_n >= k * (k - 1) && (r - k) * (k - 1) < n - k * m - 2 * eta_n)
    throw InternalContradiction("augmentation", "(r-k)(k-1) < n - km - 2 ceil(eta n)");
  Augmentation a;
  a.r = static_cast<std::uint32_t>(r);
  a.eta_n = static_cast<std::uint32_t>(eta_n);
  a.residual = static_cast<std::uint32_t>(r * (k - 1) - slack);
  a.graph = join_clique(h, a.r);
  return a;
}

PipelineHypotheses check_hypotheses(const KGraph& h, std::uint32_t m, std::uint32_t r, const PipelineConfig& cfg) {
  const auto n = h.n();
  const auto k = h.k();
  PipelineHypotheses hyp;
  hyp.alpha_bound = Rational(n) - m - cfg.eps * n;
  if (cfg.check_independence) {
    hyp.alpha = independence_number(h);
    hyp.independence = Rational(static_cast<unsigned long>(*hyp.alpha)) < hyp.alpha_bound;
  } else {
    warn("independence hypothesis not checked");
  }
  hyp.delta1 = k >= 2 && n > 0 ? BigInt(static_cast<unsigned long>(min_l_degree(h, 1))) : BigInt(0);
  hyp.degree_bound = Rational(vertex_degree_threshold(n, k, m)) - cfg.rho * Rational(pow_int(n, k - 1));
  hyp.degree = Rational(hyp.delta1) > hyp.degree_bound;
  const long long lhs = (static_cast<long long>(r) - k) * (static_cast<long long>(k) - 1);
  hyp.r_condition = lhs >= static_cast<long long>(n) - static_cast<long long>(k) * m;
  hyp.m_range = ratio(n, 2 * k * k * k * k) < m && Rational(m) <= ratio(n - 1, 2 * (k - 1)) + 1;
  if (k >= 2) {
    const BigInt eps_den = pow_int(3, k >= 2 ? k - 2 : 0) * factorial(k) * pow_int(k, 3);
    const Rational eps4 = cfg.eps * cfg.eps * cfg.eps * cfg.eps;
    hyp.constants_in_range = sgn(cfg.eps) > 0 && cfg.eps <= ratio(1, eps_den) && sgn(cfg.rho) > 0 &&
                             cfg.rho < eps4 / Rational(pow_int(k, 8));
  }
  return hyp;
}

std::string PipelineTrace::to_json(bool timings) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json step;
    step["name"] = s.name;
    step["status"] = s.status;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [key, value] : s.details) d[key] = value;
    step["details"] = d;
    if (timings) step["millis"] = s.millis;
    arr.push_back(step);
  }
  nlohmann::ordered_json out;
  out["steps"] = arr;
  return out.dump();
}

PipelineResult fractional_pm_pipeline(const KGraph& h, std::uint32_t m, std::uint32_t r, const PipelineConfig& cfg) {
  cfg.validate();
  const auto n = h.n();
  const auto k = h.k();
  if (k < 3) throw ParameterError("the pipeline needs k >= 3");
  if (m < 1 || std::uint64_t{k} * m > n) throw ParameterError("m must satisfy 1 <= m and km <= n");
  const auto n1 = n + r;

  PipelineResult out;
  PipelineTrace& trace = out.trace;

  {
    StepTimer t(trace, "hypotheses");
    out.hypotheses = check_hypotheses(h, m, r, cfg);
    const auto& hyp = out.hypotheses;
    if (hyp.alpha) t.add("alpha", std::to_string(*hyp.alpha));
    t.add("alpha_bound", to_string(hyp.alpha_bound));
    t.add("independence", hyp.independence ? (*hyp.independence ? "true" : "false") : "unchecked");
    t.add("delta1", to_string(hyp.delta1));
    t.add("degree_bound", to_string(hyp.degree_bound));
    t.add("degree", hyp.degree ? "true" : "false");
    t.add("r_condition", hyp.r_condition ? "true" : "false");
    t.add("m_range", hyp.m_range ? "true" : "false");
    t.add("constants_in_range", hyp.constants_in_range ? "true" : "false");
    t.add("degree_slack_rho_n_k_minus_1", to_string(cfg.rho * Rational(pow_int(n, k - 1))));
    t.add("padding_2eta_over_k", to_string(2 * cfg.eta / k));
    if (!hyp.hold()) t.status("failed");
  }

  const KGraph hr = join_clique(h, r);
  Relabeling rel;
  {
    StepTimer t(trace, "cover");
    const auto cover = min_fractional_cover(hr);
    rel = relabel_prefix_by_weights(hr, cover.w, n);
    t.add("r", std::to_string(r));
    t.add("tau_frac", to_string(cover.value));
    t.add("pivots", std::to_string(cover.pivots));
    t.add("order", join(rel.order));
  }
  out.order = rel.order;
  out.cover = rel.weights;

  KGraph g, g_link;
  {
    StepTimer t(trace, "closure");
    out.h_prime = weight_closure(n1, k, rel.weights);
    for (std::size_t i = 0; i < rel.graph.num_edges(); ++i)
      if (!out.h_prime.contains(rel.graph.edge(i)))
        throw InternalContradiction("cover", "an edge of H_r^k has weight below 1");
    std::vector<Vertex> base(n);
    std::iota(base.begin(), base.end(), 1);
    g = induced(out.h_prime, base).graph;
    g_link = link(g, n);
    t.add("h_prime_edges", std::to_string(out.h_prime.num_edges()));
    t.add("g_edges", std::to_string(g.num_edges()));
    t.add("link_edges", std::to_string(g_link.num_edges()));
  }

  const auto block = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(n, m + to_u64(floor(cfg.eps * Rational(static_cast<unsigned long>(n))))));
  {
    StepTimer t(trace, "structure");
    const bool stable = is_stable(g_link);
    t.add("stable", stable ? "true" : "false");
    if (!stable) {
      t.status("failed");
      throw InternalContradiction("link-stable", "the link of n in G is not stable");
    }

    std::vector<Vertex> s(block);
    std::iota(s.begin(), s.end(), 1);
    const auto gs = induced(g, s).graph;
    const bool complete_block = BigInt(static_cast<unsigned long>(gs.num_edges())) == binomial(block, k);
    t.add("block", std::to_string(block));
    t.add("block_complete", complete_block ? "true" : "false");
    if (!complete_block) {
      if (out.hypotheses.independence.value_or(false)) {
        t.status("failed");
        throw InternalContradiction("block-complete", "G[[m + eps n]] is not complete although alpha(H) is small");
      }
      t.status("partial");
    }

    for (std::size_t i = 0; i < g_link.num_edges(); ++i) {
      const auto e = g_link.edge(i);
      Edge ext(e.begin(), e.end());
      ext.push_back(0);
      for (Vertex v = 1; v < n; ++v) {
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        ext.back() = v;
        Edge sorted = ext;
        std::sort(sorted.begin(), sorted.end());
        if (!g.contains(sorted)) {
          t.status("failed");
          throw InternalContradiction("link-extension", join(Edge(e.begin(), e.end())) + " lies in N_G(n) but not in N_G(" +
                                                    std::to_string(v) + ")");
        }
      }
    }
    t.add("downward_transfer", "true");
  }

  {
    StepTimer t(trace, "matching");
    std::optional<Matching> mm;
    if (cfg.route != Route::greedy) {
      mm = exact_route(g, g_link, m, cfg, t);
      if (mm) out.route_used = "exact";
    }
    if (!mm && cfg.route != Route::exact) {
      mm = greedy_route(g, g_link, m, block, cfg, t);
      if (mm) out.route_used = "greedy";
    }
    if (!mm) {
      t.status("failed");
      fail_step(trace, "matching", "no route found a matching of size m in G");
    }
    if (!verify_matching(g, *mm) || mm->size() != m)
      throw InternalContradiction("matching", "route produced an invalid matching");
    out.matching = std::move(*mm);
    t.add("route", out.route_used);
    t.add("edges", edges_text(out.matching));
  }

  out.s = n1 % k;
  {
    StepTimer t(trace, "completion");
    std::vector<char> used(n + 1, 0);
    for (const auto& e : out.matching.edges)
      for (auto v : e) used[v] = 1;
    std::vector<Vertex> left;
    for (Vertex v = 1; v <= n; ++v)
      if (!used[v]) left.push_back(v);
    std::vector<Vertex> q;
    for (Vertex v = n + out.s + 1; v <= n1; ++v) q.push_back(v);

    std::size_t li = 0, qi = 0;
    const auto take = [&](std::size_t from_left) {
      Edge e(left.begin() + li, left.begin() + li + from_left);
      li += from_left;
      for (std::size_t j = from_left; j < k; ++j) e.push_back(q[qi++]);
      std::sort(e.begin(), e.end());
      out.completion.edges.push_back(std::move(e));
    };
    while (li < left.size() && qi < q.size()) {
      const std::size_t rest = left.size() - li;
      const std::size_t use = std::min<std::size_t>(rest, k - 1);
      if (q.size() - qi < k - use) break;
      take(use);
    }
    if (li == left.size()) {
      while (q.size() - qi >= k) take(0);
    } else {
      // Q ran short: the remaining original vertices need a perfect matching of their own
      std::vector<Vertex> rest(left.begin() + li, left.end());
      const auto sub = induced(out.h_prime, rest);
      const auto res = exact_nu(sub.graph, {cfg.node_budget, false});
      t.add("fallback_nu", std::to_string(res.nu));
      if (res.nu * k != rest.size() || qi != q.size()) {
        t.status("failed");
        fail_step(trace, "completion", "H' - Q' - V(M) has no perfect matching through Q");
      }
      for (const auto& e : res.matching.edges) {
        Edge mapped;
        for (auto v : e) mapped.push_back(sub.original[v - 1]);
        out.completion.edges.push_back(std::move(mapped));
      }
    }
    for (const auto& e : out.completion.edges)
      if (!out.h_prime.contains(e)) throw InternalContradiction("completion", "a Q-edge " + join(e) + " is missing from H'");
    t.add("s", std::to_string(out.s));
    t.add("edges", std::to_string(out.completion.size()));
    t.add("q_spare", std::to_string(q.size() - qi));
  }

  {
    StepTimer t(trace, "assemble");
    FractionalAssignment phi;
    phi.n = n1;
    phi.k = k;
    std::vector<Edge> ones = out.matching.edges;
    ones.insert(ones.end(), out.completion.edges.begin(), out.completion.edges.end());
    if (out.s != 0) {
      if (ones.empty()) fail_step(trace, "assemble", "no edge available for the splice");
      const Edge f = out.completion.empty() ? out.matching.edges.front() : out.completion.edges.front();
      ones.erase(std::find(ones.begin(), ones.end(), f));
      std::vector<Vertex> ground = f;
      for (Vertex v = n + 1; v <= n + out.s; ++v) ground.push_back(v);
      std::sort(ground.begin(), ground.end());
      const auto window = clique_window_matching(static_cast<std::uint32_t>(ground.size()), k);
      for (const auto& [e, x] : window.weights) {
        Edge mapped;
        for (auto v : e) mapped.push_back(ground[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        phi.weights[mapped] += x;
      }
      t.add("splice_edge", join(f));
    }
    for (const auto& e : ones) phi.weights[e] += 1;
    out.phi = std::move(phi);
    out.value = out.phi.value();
    out.lp_value = max_fractional_matching(hr).value;
    t.add("value", to_string(out.value));
    t.add("lp_value", to_string(out.lp_value));
    if (!is_perfect_fractional_matching(out.h_prime, out.phi))
      throw InternalContradiction("perfect", "assembled assignment is not a perfect fractional matching of H'");
    if (out.value != out.lp_value)
      throw InternalContradiction("duality", "value differs from nu'(H_r^k)");
  }
  return out;
}

}  // namespace hypermatch
