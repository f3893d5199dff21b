#pragma once

#include <stdexcept>
#include <string>

namespace pfont {

enum class ErrorCode {
  DegenerateDisks,
  DisconnectedPath,
  InvalidArgument,
  UnknownLetter,
  NotAChain,
  NoMatch,
  AmbiguousMatch,
  InternalTangentInfeasible,
  InvalidSpec,
  BudgetExceeded,
  InvalidPolyabolo,
  InterfaceMismatch,
  Unsupported,
  UnknownCharacter,
  MissingFontFile,
  NoSolution,
  AmbiguousSolution,
  ParseError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateDisks: return "DegenerateDisks";
    case ErrorCode::DisconnectedPath: return "DisconnectedPath";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::InternalTangentInfeasible: return "InternalTangentInfeasible";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidPolyabolo: return "InvalidPolyabolo";
    case ErrorCode::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::MissingFontFile: return "MissingFontFile";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pfont
