#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pftop {

enum class ErrorKind {
  // grades and sets
  MalformedNumber,
  OutOfRange,
  PrecisionExceeded,
  InvalidUniverse,
  LengthMismatch,
  GradeSumExceeded,
  UnknownElement,
  UniverseMismatch,
  // families
  EmptyFamily,
  DuplicateName,
  ReservedName,
  UnknownName,
  // topology checks and construction
  NotATopology,
  NotABase,
  NotMinimal,
  NotABalancedChain,
  ContainsBoundary,
  // law lab
  InvalidDomain,
  DomainTooLarge,
  UnknownLaw,
  // expressions
  SyntaxError,
  // family documents
  ParseError,
  SchemaError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `what()` reads "<Kind>: <message>".
///
/// Errors that wrap a lower-level failure (a family document whose grade
/// overflows, say) keep the original kind in `cause()`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, ErrorKind cause, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  ErrorKind cause() const noexcept { return cause_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  ErrorKind cause_;
  std::string message_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  /// Byte offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace pftop
