#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transat {

enum class ErrorCode {
  // eqgraph
  DuplicateEdge,
  DuplicateVariable,
  VertexOutOfRange,
  InvalidVariable,
  PartialAssignment,
  UnsetVariable,
  NotASuperset,
  InputViolatesTransitivity,
  // cycles / solver / obdd budgets
  LimitExceeded,
  ResourceLimit,
  RoundLimitExceeded,
  NodeLimitExceeded,
  // chordal / constraints
  VarBaseTooLow,
  EdgeMissing,
  // cnfio
  MalformedHeader,
  MalformedToken,
  MalformedEntry,
  LiteralOutOfRange,
  UnterminatedClause,
  ClauseCountMismatch,
  EntryCountMismatch,
  DuplicatePair,
  // obdd
  ForeignHandle,
  UnknownVariable,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a configurable budget runs out. `count` is the amount of work
/// completed before giving up (cycles found, nodes built, rounds run, ...).
class LimitError : public Error {
 public:
  LimitError(ErrorCode code, const std::string& message, std::size_t count)
      : Error(code, message), count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

inline bool is_limit(ErrorCode code) noexcept {
  return code == ErrorCode::LimitExceeded || code == ErrorCode::ResourceLimit ||
         code == ErrorCode::RoundLimitExceeded || code == ErrorCode::NodeLimitExceeded;
}

}  // namespace transat
