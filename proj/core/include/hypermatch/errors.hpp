#pragma once

#include <stdexcept>
#include <string>

namespace hypermatch {

/// A query outside the domain of a graph (|T| > k, l > k-1, vertex out of range).
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter outside the range an operation accepts.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input that violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n - km - ceil(eta n) < 0: there is no room for the clique padding.
class InfeasibleAugmentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claim that must hold by construction failed. Signals an implementation bug.
class InternalContradiction : public std::logic_error {
 public:
  InternalContradiction(std::string claim, const std::string& what)
      : std::logic_error(what), claim_(std::move(claim)) {}
  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

/// A constructive step ran out of routes. Carries the serialized trace so far.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(std::string step, const std::string& what, std::string trace)
      : std::runtime_error(what), step_(std::move(step)), trace_(std::move(trace)) {}
  const std::string& step() const noexcept { return step_; }
  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string step_;
  std::string trace_;
};

/// Text that does not follow the graph file format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypermatch
