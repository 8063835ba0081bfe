#include "hypermatch/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypermatch/errors.hpp"

#ifndef HYPERMATCH_VERSION
#define HYPERMATCH_VERSION "0.0.0"
#endif

namespace hypermatch {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json to_json(const InstanceRecord& r) {
  Json j;
  j["type"] = "instance";
  j["index"] = r.index;
  j["label"] = r.label;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["edges"] = r.edges;
  j["delta1"] = to_string(r.delta1);
  j["threshold"] = to_string(r.threshold);
  j["passed_filter"] = r.passed_filter;
  j["nu"] = r.nu ? Json(*r.nu) : Json(nullptr);
  j["nu_frac"] = r.nu_frac ? Json(to_string(*r.nu_frac)) : Json(nullptr);
  j["complete"] = r.complete;
  j["counterexample"] = r.counterexample;
  j["verified"] = r.verified;
  j["hash"] = r.hash;
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  return j;
}

InstanceRecord instance_from_json(const Json& j) {
  InstanceRecord r;
  r.index = j.at("index").get<std::uint64_t>();
  r.label = j.at("label").get<std::string>();
  r.n = j.at("n").get<std::uint32_t>();
  r.k = j.at("k").get<std::uint32_t>();
  r.m = j.at("m").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.edges = j.at("edges").get<std::uint64_t>();
  r.delta1 = BigInt(j.at("delta1").get<std::string>());
  r.threshold = BigInt(j.at("threshold").get<std::string>());
  r.passed_filter = j.at("passed_filter").get<bool>();
  if (!j.at("nu").is_null()) r.nu = j.at("nu").get<std::uint64_t>();
  if (!j.at("nu_frac").is_null()) r.nu_frac = parse_rational(j.at("nu_frac").get<std::string>());
  r.complete = j.at("complete").get<bool>();
  r.counterexample = j.at("counterexample").get<bool>();
  r.verified = j.at("verified").get<bool>();
  r.hash = j.at("hash").get<std::uint64_t>();
  if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

}  // namespace

std::uint64_t ExperimentReport::indeterminate() const {
  std::uint64_t c = 0;
  for (const auto& r : records) c += r.complete ? 0 : 1;
  return c;
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "rows") return ReportFormat::rows;
  if (text == "records") return ReportFormat::records;
  throw ParameterError("unknown report format: " + text);
}

const char* version() { return HYPERMATCH_VERSION; }

std::string render_report(const ExperimentReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::rows) {
    bool timed = false;
    for (const auto& r : report.records) timed = timed || r.runtime_ms.has_value();
    out << "index,label,n,k,m,seed,edges,delta1,threshold,passed_filter,nu,nu_frac,complete,counterexample,"
           "verified,hash";
    if (timed) out << ",runtime_ms";
    out << '\n';
    for (const auto& r : report.records) {
      out << r.index << ',' << csv_field(r.label) << ',' << r.n << ',' << r.k << ',' << r.m << ',' << r.seed << ','
          << r.edges << ',' << to_string(r.delta1) << ',' << to_string(r.threshold) << ','
          << (r.passed_filter ? 1 : 0) << ',' << (r.nu ? std::to_string(*r.nu) : "") << ','
          << (r.nu_frac ? to_string(*r.nu_frac) : "") << ',' << (r.complete ? 1 : 0) << ','
          << (r.counterexample ? 1 : 0) << ',' << (r.verified ? 1 : 0) << ',' << r.hash;
      if (timed) out << ',' << (r.runtime_ms ? Json(*r.runtime_ms).dump() : "");
      out << '\n';
    }
    return out.str();
  }

  Json head;
  head["type"] = "experiment";
  head["experiment"] = report.experiment;
  Json params = Json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  head["parameters"] = params;
  head["seed"] = report.seed;
  head["version"] = report.version;
  head["complete"] = report.complete;
  out << head.dump() << '\n';
  for (const auto& r : report.records) out << to_json(r).dump() << '\n';
  for (const auto& c : report.counterexamples) {
    Json j;
    j["type"] = "counterexample";
    j["index"] = c.index;
    j["graph"] = c.graph;
    out << j.dump() << '\n';
  }
  return out.str();
}

void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out) {
  out << render_report(report, format);
  if (!out) throw std::runtime_error("report write failed");
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": " + std::strerror(errno));
  file << render_report(report, format);
  file.close();
  if (!file) throw std::runtime_error(path + ": " + std::strerror(errno));
}

ExperimentReport parse_records(const std::string& text) {
  ExperimentReport report;
  std::istringstream in(text);
  std::string line;
  bool have_head = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
      const auto type = j.at("type").get<std::string>();
      if (type == "experiment") {
        report.experiment = j.at("experiment").get<std::string>();
        for (const auto& [key, value] : j.at("parameters").items()) report.parameters.emplace_back(key, value.get<std::string>());
        report.seed = j.at("seed").get<std::uint64_t>();
        report.version = j.at("version").get<std::string>();
        report.complete = j.at("complete").get<bool>();
        have_head = true;
      } else if (type == "instance") {
        report.records.push_back(instance_from_json(j));
      } else if (type == "counterexample") {
        report.counterexamples.push_back({j.at("index").get<std::uint64_t>(), j.at("graph").get<std::string>()});
      } else {
        throw ParseError("unknown record type " + type);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_head) throw ParseError("missing experiment header record");
  return report;
}

}  // namespace hypermatch
