#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aspdbg {

enum class ErrorKind {
  Syntax,
  BuiltinInHead,
  BuiltinInNegativeBody,
  InconsistentInterpretation,
  BuiltinInInterpretation,
  ArityClashWarning,
  InvalidRule,
  UnboundVariable,
  NonGround,
  BudgetExceeded,
  LabelCollision,
  Unsupported,
  SolverNotConfigured,
  SolverFailure,
  Io,
};

/// Stable kebab-case name used in JSON payloads and CLI messages.
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SourcePosition {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t offset = 0;  // byte offset
};

/// Diagnostic raised by the program and interpretation readers. Always
/// carries the position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourcePosition position, const std::string& message);

  const SourcePosition& position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourcePosition position_;
  std::string detail_;
};

/// Thrown when an enumeration would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::BudgetExceeded, message) {}
};

}  // namespace aspdbg
