// hypermatch: command line front end for the hypergraph matching library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermatch/constructions.hpp"
#include "hypermatch/containment.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/graph_io.hpp"
#include "hypermatch/harness.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/pipeline.hpp"
#include "hypermatch/report.hpp"

namespace hm = hypermatch;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIndeterminate = 2;
constexpr const char* kBudgetVariable = "HYPERMATCH_NODE_BUDGET";

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "records";
};

std::uint64_t node_budget() {
  const char* text = std::getenv(kBudgetVariable);
  if (text == nullptr || *text == '\0') return hm::kDefaultNodeBudget;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used != std::string(text).size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw hm::ParameterError(std::string(kBudgetVariable) + " is not a nonnegative integer");
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

hm::KGraph read_input(const std::string& path) {
  if (path == "-") return hm::read_kgraph(std::cin);
  return hm::load_kgraph(path);
}

Json edge_list(const std::vector<hm::Edge>& edges) {
  Json arr = Json::array();
  for (const auto& e : edges) arr.push_back(e);
  return arr;
}

// records: the object on one line; rows: header of keys, then values.
void emit_fields(const Globals& g, const Json& fields) {
  Output out(g.out);
  auto& os = out.stream();
  if (hm::parse_report_format(g.format) == hm::ReportFormat::records) {
    os << fields.dump() << '\n';
    return;
  }
  std::string head, row;
  bool first = true;
  for (const auto& [key, value] : fields.items()) {
    head += (first ? "" : ",") + key;
    std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
    if (cell.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      cell = quoted + "\"";
    }
    row += (first ? "" : ",") + cell;
    first = false;
  }
  os << head << '\n' << row << '\n';
}

struct GenOptions {
  std::string family = "complete";
  std::uint32_t n = 0, k = 3, m = 1, l = 0, a = 0, b = 0, r = 0;
  double p = 0.5, keep = 0.95, extra = 0.05;
  std::uint64_t tries = 1000;
};

int run_gen(const Globals& g, const GenOptions& o) {
  hm::KGraph h;
  if (o.family == "complete") {
    h = hm::complete(o.n, o.k);
  } else if (o.family == "hknm") {
    h = hm::build_hknm(o.n, o.k, o.m).graph;
  } else if (o.family == "hkl") {
    std::vector<hm::Vertex> w(o.m > 0 ? o.m - 1 : 0);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<hm::Vertex>(i + 1);
    h = hm::build_hkl(hm::VertexPartition::from_w(o.n, w), o.k, o.l == 0 ? o.k - 1 : o.l);
  } else if (o.family == "parity") {
    h = hm::parity_construction(o.a, o.b, o.k);
  } else if (o.family == "space") {
    h = hm::space_barrier(o.n, o.k);
  } else if (o.family == "random") {
    h = hm::random_kgraph(o.n, o.k, o.p, g.seed);
  } else if (o.family == "conditioned") {
    auto s = hm::random_kgraph_conditioned(o.n, o.k, o.m, std::nullopt, o.tries, g.seed);
    if (s.exhausted()) {
      std::cerr << "conditioned sampler exhausted " << s.tries_used << " tries\n";
      return kExitIndeterminate;
    }
    h = std::move(*s.graph);
  } else if (o.family == "planted") {
    h = hm::random_planted(o.n, o.k, o.m, o.keep, o.extra, g.seed);
  } else {
    throw hm::ParameterError("unknown family: " + o.family);
  }
  if (o.r > 0) h = hm::join_clique(h, o.r);
  Output out(g.out);
  hm::write_kgraph(out.stream(), h);
  return kExitOk;
}

int run_nu(const Globals& g, const std::string& input, bool lp_bound) {
  const auto h = read_input(input);
  const auto res = hm::exact_nu(h, {node_budget(), lp_bound});
  Json f;
  f["nu"] = res.nu;
  f["complete"] = res.complete;
  f["nodes"] = res.nodes;
  f["matching"] = edge_list(res.matching.edges);
  emit_fields(g, f);
  return res.complete ? kExitOk : kExitIndeterminate;
}

int run_frac(const Globals& g, const std::string& input) {
  const auto h = read_input(input);
  const auto packing = hm::max_fractional_matching(h);
  const auto covering = hm::min_fractional_cover(h);
  const bool witnesses = hm::is_fractional_matching(h, packing.phi) && hm::is_fractional_cover(h, covering.w);
  const bool holds = witnesses && packing.value == covering.value;
  Json phi = Json::array();
  for (const auto& [e, x] : packing.phi.weights)
    if (sgn(x) != 0) phi.push_back(Json{{"edge", e}, {"weight", hm::to_string(x)}});
  Json w = Json::array();
  for (const auto& x : covering.w.w) w.push_back(hm::to_string(x));
  Json f;
  f["nu_frac"] = hm::to_string(packing.value);
  f["tau_frac"] = hm::to_string(covering.value);
  f["duality"] = holds;
  f["phi"] = phi;
  f["cover"] = w;
  emit_fields(g, f);
  return holds ? kExitOk : kExitFailure;
}

int run_contain(const Globals& g, const std::string& input, std::uint32_t m, const std::string& eps,
                const std::string& mode) {
  const auto h = read_input(input);
  const auto rep = hm::eps_contains(h, m, hm::parse_rational(eps), hm::parse_search_mode(mode));
  Json f;
  f["w"] = rep.partition.w;
  f["deficiency"] = hm::to_string(rep.deficiency);
  f["bound"] = hm::to_string(rep.epsilon_bound);
  f["contains"] = rep.satisfied;
  f["mode"] = hm::to_string(rep.search_mode);
  f["partitions_examined"] = rep.partitions_examined;
  emit_fields(g, f);
  return kExitOk;
}

int run_nibble(const Globals& g, const std::string& input, hm::NibbleConfig cfg) {
  const auto h = read_input(input);
  cfg.seed = g.seed;
  const auto res = hm::nibble_matching(h, cfg);
  if (!hm::verify_matching(h, res.matching)) throw hm::InternalContradiction("nibble", "output is not a matching");
  Json f;
  f["matching_size"] = res.matching.size();
  f["covered_fraction"] = hm::to_string(res.covered_fraction);
  f["rounds"] = res.rounds.size();
  f["greedy_cleanup"] = res.greedy_cleanup;
  f["sigma_met"] = res.sigma_met;
  f["gate_passes"] = res.gate.passes();
  f["average_degree"] = res.gate.average_degree;
  f["max_codegree"] = res.gate.max_codegree;
  emit_fields(g, f);
  return kExitOk;
}

struct PipelineOptions {
  std::string input;
  std::uint32_t m = 1;
  std::int64_t r = -1;
  std::string eta = "1/12", rho = "1/100", eps = "1/10", route = "auto";
  bool skip_independence = false;
  bool timings = true;
};

int run_pipeline(const Globals& g, const PipelineOptions& o) {
  const auto h = read_input(o.input);
  hm::PipelineConfig cfg;
  cfg.eta = hm::parse_rational(o.eta);
  cfg.rho = hm::parse_rational(o.rho);
  cfg.eps = hm::parse_rational(o.eps);
  cfg.route = hm::parse_route(o.route);
  cfg.seed = g.seed;
  cfg.check_independence = !o.skip_independence;
  cfg.node_budget = node_budget();
  std::uint32_t r = 0;
  if (o.r >= 0) {
    r = static_cast<std::uint32_t>(o.r);
  } else {
    r = hm::build_augmented(h, o.m, cfg.eta).r;
  }
  Json f;
  f["n"] = h.n();
  f["k"] = h.k();
  f["m"] = o.m;
  f["r"] = r;
  int code = kExitOk;
  try {
    const auto res = hm::fractional_pm_pipeline(h, o.m, r, cfg);
    f["status"] = "ok";
    f["hypotheses_hold"] = res.hypotheses.hold();
    f["route"] = res.route_used;
    f["value"] = hm::to_string(res.value);
    f["lp_value"] = hm::to_string(res.lp_value);
    f["trace"] = Json::parse(res.trace.to_json(o.timings));
  } catch (const hm::StepFailure& e) {
    f["status"] = "step-failure";
    f["step"] = e.step();
    f["error"] = e.what();
    f["trace"] = Json::parse(e.trace());
    code = kExitFailure;
  }
  emit_fields(g, f);
  return code;
}

int run_verify(const Globals& g, const std::vector<std::uint32_t>& ks, std::uint32_t n_max, bool timings) {
  try {
    const auto rep = hm::verify_tightness(hm::tightness_grid(ks, n_max), timings);
    Output out(g.out);
    hm::emit_report(rep, hm::parse_report_format(g.format), out.stream());
  } catch (const hm::AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n' << e.instance();
    return kExitFailure;
  }
  return kExitOk;
}

int run_search(const Globals& g, hm::SearchConfig cfg, const std::string& model) {
  cfg.model = hm::parse_search_model(model);
  cfg.seed = g.seed;
  cfg.node_budget = node_budget();
  const auto rep = hm::conjecture_search(cfg);
  Output out(g.out);
  hm::emit_report(rep, hm::parse_report_format(g.format), out.stream());
  if (!rep.counterexamples.empty())
    std::cerr << rep.counterexamples.size() << " counterexample(s) recorded\n";
  return rep.complete ? kExitOk : kExitIndeterminate;
}

int run_report(const Globals& g, const std::string& input) {
  std::ostringstream text;
  if (input == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw std::runtime_error(input + ": cannot open");
    text << in.rdbuf();
  }
  const auto rep = hm::parse_records(text.str());
  Output out(g.out);
  hm::emit_report(rep, hm::parse_report_format(g.format), out.stream());
  return rep.complete ? kExitOk : kExitIndeterminate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph matching experiments: constructions, exact and fractional matchings, "
               "containment, the fractional matching pipeline and the conjecture harness."};
  app.footer(std::string("Exit status: 0 success, 1 failed assertion or error, 2 budget exhausted.\n"
                         "Environment: ") +
             kBudgetVariable + " caps the branch-and-bound nodes of each exact matching search (default " +
             std::to_string(hm::kDefaultNodeBudget) + ").");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output file (default: standard output)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"rows", "records"}))
      ->capture_default_str();

  std::string input = "-";
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "Graph file, '-' for standard input")->capture_default_str();
  };

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--family", gen.family, "complete|hknm|hkl|parity|space|random|conditioned|planted")
      ->check(CLI::IsMember({"complete", "hknm", "hkl", "parity", "space", "random", "conditioned", "planted"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Vertices");
  gen_cmd->add_option("--k", gen.k, "Uniformity")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Matching size parameter; |W| = m - 1")->capture_default_str();
  gen_cmd->add_option("--l", gen.l, "Template width for hkl (default k-1)");
  gen_cmd->add_option("--a", gen.a, "Parity construction: |A|");
  gen_cmd->add_option("--b", gen.b, "Parity construction: |B|");
  gen_cmd->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--keep", gen.keep, "Planted: template edge survival")->capture_default_str();
  gen_cmd->add_option("--extra", gen.extra, "Planted: other edge density")->capture_default_str();
  gen_cmd->add_option("--tries", gen.tries, "Conditioned: rejection cap")->capture_default_str();
  gen_cmd->add_option("--join", gen.r, "Join a clique on this many new vertices");

  bool lp_bound = false;
  auto* nu_cmd = app.add_subcommand("nu", "Exact matching number");
  add_input(nu_cmd);
  nu_cmd->add_flag("--lp-bound", lp_bound, "Prune with the fractional matching number");

  auto* frac_cmd = app.add_subcommand("frac", "Fractional matching and cover numbers");
  add_input(frac_cmd);

  std::uint32_t contain_m = 1;
  std::string contain_eps = "1/100", contain_mode = "auto";
  auto* contain_cmd = app.add_subcommand("contain", "Minimum deficiency against H_k(n, m)");
  add_input(contain_cmd);
  contain_cmd->add_option("--m", contain_m, "m")->required();
  contain_cmd->add_option("--eps", contain_eps, "eps (rational)")->capture_default_str();
  contain_cmd->add_option("--mode", contain_mode, "auto|exhaustive|local")->capture_default_str();

  hm::NibbleConfig nib;
  auto* nibble_cmd = app.add_subcommand("nibble", "Semi-random matching");
  add_input(nibble_cmd);
  nibble_cmd->add_option("--bite", nib.bite_fraction, "Sampled edges per vertex per round")->capture_default_str();
  nibble_cmd->add_option("--rounds", nib.max_rounds, "Round cap")->capture_default_str();
  nibble_cmd->add_option("--sigma", nib.sigma_target, "Target uncovered fraction")->capture_default_str();
  nibble_cmd->add_option("--tau", nib.tau_check, "Regularity slack")->capture_default_str();
  nibble_cmd->add_option("--min-degree", nib.min_degree, "Average degree floor")->capture_default_str();

  PipelineOptions pipe;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Perfect fractional matching of the padded graph");
  pipe_cmd->add_option("--input,-i", pipe.input, "Graph file, '-' for standard input")->required();
  pipe_cmd->add_option("--m", pipe.m, "m")->required();
  pipe_cmd->add_option("--r", pipe.r, "Padding size (default from eta)");
  pipe_cmd->add_option("--eta", pipe.eta, "Padding parameter")->capture_default_str();
  pipe_cmd->add_option("--rho", pipe.rho, "Degree slack")->capture_default_str();
  pipe_cmd->add_option("--eps", pipe.eps, "Block parameter")->capture_default_str();
  pipe_cmd->add_option("--route", pipe.route, "auto|exact|greedy")
      ->check(CLI::IsMember({"auto", "exact", "greedy"}))
      ->capture_default_str();
  pipe_cmd->add_flag("--skip-independence", pipe.skip_independence, "Do not compute alpha(H)");
  bool pipe_no_timings = false;
  pipe_cmd->add_flag("--no-timings", pipe_no_timings, "Omit step timings from the trace");

  std::vector<std::uint32_t> ks{3, 4};
  std::uint32_t n_max = 14;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Tightness of the vertex degree threshold");
  verify_cmd->add_option("--k", ks, "Uniformities")->capture_default_str();
  verify_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  verify_cmd->add_flag("--timings", timings, "Record runtimes (output no longer byte-stable)");

  hm::SearchConfig search;
  std::string model = "conditioned";
  auto* search_cmd = app.add_subcommand("search", "Counterexample search for the degree conjecture");
  search_cmd->add_option("--n", search.n, "Vertices")->required();
  search_cmd->add_option("--k", search.k, "Uniformity")->required();
  search_cmd->add_option("--m", search.m, "m")->required();
  search_cmd->add_option("--model", model, "uniform|conditioned|planted")->capture_default_str();
  search_cmd->add_option("--trials", search.trials, "Samples")->required();
  search_cmd->add_option("--p", search.p, "Uniform model edge probability")->capture_default_str();
  search_cmd->add_option("--tries", search.tries, "Conditioned model rejection cap")->capture_default_str();
  search_cmd->add_option("--keep", search.keep, "Planted model template survival")->capture_default_str();
  search_cmd->add_option("--extra", search.extra, "Planted model other density")->capture_default_str();
  search_cmd->add_flag("--timings", search.timings, "Record runtimes (output no longer byte-stable)");

  auto* report_cmd = app.add_subcommand("report", "Re-emit a records file");
  add_input(report_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*nu_cmd) return run_nu(g, input, lp_bound);
    if (*frac_cmd) return run_frac(g, input);
    if (*contain_cmd) return run_contain(g, input, contain_m, contain_eps, contain_mode);
    if (*nibble_cmd) return run_nibble(g, input, nib);
    if (*pipe_cmd) {
      pipe.timings = !pipe_no_timings;
      return run_pipeline(g, pipe);
    }
    if (*verify_cmd) return run_verify(g, ks, n_max, timings);
    if (*search_cmd) return run_search(g, search, model);
    if (*report_cmd) return run_report(g, input);
  } catch (const hm::InternalContradiction& e) {
    std::cerr << "internal contradiction (" << e.claim() << "): " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
