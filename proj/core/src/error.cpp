#include "pftop/error.hpp"

namespace pftop {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::InvalidUniverse: return "InvalidUniverse";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::GradeSumExceeded: return "GradeSumExceeded";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ReservedName: return "ReservedName";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::NotABase: return "NotABase";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotABalancedChain: return "NotABalancedChain";
    case ErrorKind::ContainsBoundary: return "ContainsBoundary";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::DomainTooLarge: return "DomainTooLarge";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message) : Error(kind, kind, message) {}

Error::Error(ErrorKind kind, ErrorKind cause, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      cause_(cause),
      message_(message) {}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(ErrorKind::SyntaxError, message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace pftop
