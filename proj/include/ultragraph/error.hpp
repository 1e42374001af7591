#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ultragraph {

enum class ErrorCode {
  EmptyGraph,
  DuplicateVertex,
  InvalidVertexName,
  SelfLoop,
  DuplicateEdge,
  UnknownVertex,
  NegativeWeight,
  InvalidWeight,
  InvalidMatrix,
  Disconnected,
  NotExtendable,
  NotCompleteMultipartite,
  VertexMismatch,
  NotPseudometric,
  NotPseudoultrametric,
  NotUltrametric,
  MissingConstant,
  BadHubIndex,
  NoPath,
  BadSequence,
  SizeLimit,
  NonTerminatingDecimal,
  ParseError,
};

/// Stable kebab-case name used in machine-readable CLI diagnostics.
inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::DuplicateVertex: return "duplicate-vertex";
    case ErrorCode::InvalidVertexName: return "invalid-vertex-name";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::UnknownVertex: return "unknown-vertex";
    case ErrorCode::NegativeWeight: return "negative-weight";
    case ErrorCode::InvalidWeight: return "invalid-weight";
    case ErrorCode::InvalidMatrix: return "invalid-matrix";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::NotExtendable: return "not-extendable";
    case ErrorCode::NotCompleteMultipartite: return "not-complete-multipartite";
    case ErrorCode::VertexMismatch: return "vertex-mismatch";
    case ErrorCode::NotPseudometric: return "not-pseudometric";
    case ErrorCode::NotPseudoultrametric: return "not-pseudoultrametric";
    case ErrorCode::NotUltrametric: return "not-ultrametric";
    case ErrorCode::MissingConstant: return "missing-constant";
    case ErrorCode::BadHubIndex: return "bad-hub-index";
    case ErrorCode::NoPath: return "no-path";
    case ErrorCode::BadSequence: return "bad-sequence";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::NonTerminatingDecimal: return "non-terminating-decimal";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

/// Base exception for every precondition and input failure in the library.
/// `line` is set when the failure can be traced to a line of an input document.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(code, detail, line)), code_(code), detail_(detail), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& detail,
                            std::optional<std::size_t> line) {
    std::string out(to_string(code));
    if (line) out += " at line " + std::to_string(*line);
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> line_;
};

/// Raised when an operation needs a connected graph. Names one vertex from
/// each of two distinct components.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::string first, std::string second)
      : Error(ErrorCode::Disconnected, first + " " + second),
        first_(std::move(first)), second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

/// Raised when a weight admits no pseudoultrametric extension. Carries the
/// vertex names of a cycle whose last-to-first edge is its unique heaviest edge.
class NotExtendableError : public Error {
 public:
  explicit NotExtendableError(std::vector<std::string> cycle)
      : Error(ErrorCode::NotExtendable, join(cycle)), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ',';
      out += names[i];
    }
    return out;
  }

  std::vector<std::string> cycle_;
};

}  // namespace ultragraph
