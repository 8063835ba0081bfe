#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/types.hpp"

namespace hypermatch {

/// One sampled or constructed instance.
struct InstanceRecord {
  std::uint64_t index = 0;
  std::string label;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t edges = 0;
  BigInt delta1;
  BigInt threshold;
  bool passed_filter = false;
  std::optional<std::uint64_t> nu;
  std::optional<Rational> nu_frac;
  /// False when the exact search ran out of nodes.
  bool complete = true;
  bool counterexample = false;
  /// Hash and degree re-checks between filter and matching agreed.
  bool verified = false;
  std::uint64_t hash = 0;
  std::optional<double> runtime_ms;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct Counterexample {
  std::uint64_t index = 0;
  /// The graph in the text file format.
  std::string graph;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ExperimentReport {
  std::string experiment;
  /// Parameter grid, as "key=value" pairs in a fixed order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<InstanceRecord> records;
  std::vector<Counterexample> counterexamples;
  /// False when at least one instance exceeded its budget.
  bool complete = true;

  std::uint64_t indeterminate() const;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

enum class ReportFormat { rows, records };

ReportFormat parse_report_format(const std::string& text);

/// Library version string.
const char* version();

/// rows: a comma-separated table with one header line. records: one JSON
/// object per line, an experiment header first, then instances, then
/// counterexamples. Identical reports give identical bytes.
std::string render_report(const ExperimentReport& report, ReportFormat format);
void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out);
/// Writes to a file; throws std::runtime_error carrying the system message on failure.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

/// Inverse of render_report(..., records). Throws ParseError.
ExperimentReport parse_records(const std::string& text);

}  // namespace hypermatch
