#pragma once

#include <stdexcept>
#include <string>

namespace apery {

// Machine-readable error codes surfaced by the CLI.
enum class ErrorCode {
  ZeroDenominator,
  BadArgument,
  ParseError,
  NotARecurrence,
  SingularLeadingCoefficient,
  OutOfRange,
  NoExponentialGrowth,
  MeasurePole,
  InsufficientTerms,
  InsufficientPrecision,
  SpanViolation,
  NoOperatorFound,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace apery
