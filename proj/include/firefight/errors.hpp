#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace firefight {

enum class ErrorCode {
  InvalidGraph,
  NotCactus,
  Disconnected,
  RootInS,
  VertexNotOnCycle,
  NotRootCycle,
  EdgeNotOnCycle,
  InvalidM,
  VertexUnavailable,
  NoFirefighterLeft,
  GameNotFinished,
  InvalidSchedule,
  NotATree,
  WrongGraphClass,
  NoEligibleCycle,
  NoEligibleBreakVertex,
  SearchBudgetExceeded,
  GraphTooLarge,
  BadParams,
  ParseError,
  UnknownVersion,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries a 1-based position inside the offending document.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace firefight
