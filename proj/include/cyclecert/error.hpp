#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclecert {

enum class ErrorKind {
  ParseError,
  UnknownIdentifier,
  UnboundParameter,
  DivisionByZeroDenominator,
  WrongDegree,
  NotMonic,
  UnsupportedShape,
  TopologyUnsupported,
  NonzeroAtOrigin,
  NotPolynomial,
  ParityViolation,
  ZeroW,
  ZeroG1,
  GOriginViolation,
  WrongShape,
  ZeroPolynomial,
  SchemaError,
  IOError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can surface it in the report without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclecert
