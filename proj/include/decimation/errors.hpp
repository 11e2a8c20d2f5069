#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decimation {

enum class ErrorCode {
  InvalidGroupSpec,
  GroupMismatch,
  NotAUnit,
  EmptyMultiset,
  UnsupportedParameters,
  PeriodicInput,
  NotAMultiplier,
  NotCyclic,
  InternalConsistency,
  TooLarge,
  Parse,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGroupSpec: return "InvalidGroupSpec";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::EmptyMultiset: return "EmptyMultiset";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::PeriodicInput: return "PeriodicInput";
    case ErrorCode::NotAMultiplier: return "NotAMultiplier";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::InternalConsistency: return "InternalConsistencyError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace decimation
