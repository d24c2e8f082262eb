#pragma once

#include <stdexcept>
#include <string>

namespace arrprod {

enum class ErrorCode {
  DivisionByZero,
  ZeroTriple,
  DegenerateLine,
  EqualLines,
  LineAtInfinity,
  IndexOutOfRange,
  InvalidArrangement,
  BadPartition,
  SharedLine,
  BadOrdering,
  TooSmall,
  TooLarge,
  TooFewComponents,
  DimensionMismatch,
  ParseError,
  DuplicateLine,
  MixedKinds,
  LabelNotFound,
  DegenerateWindow,
  UnknownExample,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// the C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arrprod
