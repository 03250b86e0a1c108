#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace benchviz {

// Closed set of machine-readable failure codes. The string form is what the
// CLI prints and what the HTTP API puts in error bodies.
enum class ErrorCode {
  MalformedInput,
  NumericOverflow,
  DuplicateQuery,
  UnknownQuery,
  UnknownDialect,
  JsonError,
  PlanStructureError,
  MetricUnavailable,
  EmptyWindow,
  DuplicateRunName,
  ParserError,
  NameTaken,
  UnknownRun,
  WrongKind,
  NoPlanAttached,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::DuplicateQuery: return "DuplicateQuery";
    case ErrorCode::UnknownQuery: return "UnknownQuery";
    case ErrorCode::UnknownDialect: return "UnknownDialect";
    case ErrorCode::JsonError: return "JsonError";
    case ErrorCode::PlanStructureError: return "PlanStructureError";
    case ErrorCode::MetricUnavailable: return "MetricUnavailable";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::DuplicateRunName: return "DuplicateRunName";
    case ErrorCode::ParserError: return "ParserError";
    case ErrorCode::NameTaken: return "NameTaken";
    case ErrorCode::UnknownRun: return "UnknownRun";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NoPlanAttached: return "NoPlanAttached";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Exception carrying an ErrorCode. Parser errors also carry the 1-based
/// line number of the offending input line when one is known (0 otherwise).
/// A wrapping error (ParserError) keeps the code it wraps as `cause`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        code_(code),
        line_(line) {}

  Error(ErrorCode code, const Error& cause)
      : std::runtime_error(cause.what()), code_(code), cause_(cause.code()), line_(cause.line()) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<ErrorCode> cause() const noexcept { return cause_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<ErrorCode> cause_;
  std::size_t line_;
};

}  // namespace benchviz
