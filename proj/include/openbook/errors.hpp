#pragma once

#include <stdexcept>
#include <string>

namespace openbook {

// Error taxonomy shared by the library and the CLI.  Codes that describe a
// *verdict* (e.g. an arc whose cut is not a fiber surface) are returned in
// report structs instead; exceptions are reserved for misuse of an operation
// or for data that fails validation.
enum class ErrorCode {
  // surface / path validation
  EmptySurface,
  DanglingHalfEdge,
  InvalidPath,
  NotAnArc,
  NotEmbedded,
  LoopNotEmbedded,
  SelfCrossingCountWrong,
  // monodromy
  NotPositiveWord,
  MixedPositivity,
  ZeroTwist,
  // operations applied outside their hypotheses
  CutNotFiber,
  NotFiberPreserving,
  NotMinimal,
  HypothesesUnmet,
  NonDiskRegionUnresolved,
  // search / enumeration budgets
  ComplexityBudgetExceeded,
  BudgetExhaustedWithoutClosure,
  // scene text
  SyntaxError,
  UnknownName,
  ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code), line_(-1), column_(-1) {}

  Error(ErrorCode code, const std::string& message, int line, int column)
      : std::runtime_error(std::string(error_code_name(code)) + " at " +
                           std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        code_(code), line_(line), column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  ErrorCode code_;
  int line_, column_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySurface: return "EmptySurface";
    case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::LoopNotEmbedded: return "LoopNotEmbedded";
    case ErrorCode::SelfCrossingCountWrong: return "SelfCrossingCountWrong";
    case ErrorCode::NotPositiveWord: return "NotPositiveWord";
    case ErrorCode::MixedPositivity: return "MixedPositivity";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::CutNotFiber: return "CutNotFiber";
    case ErrorCode::NotFiberPreserving: return "NotFiberPreserving";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::HypothesesUnmet: return "HypothesesUnmet";
    case ErrorCode::NonDiskRegionUnresolved: return "NonDiskRegionUnresolved";
    case ErrorCode::ComplexityBudgetExceeded: return "ComplexityBudgetExceeded";
    case ErrorCode::BudgetExhaustedWithoutClosure: return "BudgetExhaustedWithoutClosure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace openbook
