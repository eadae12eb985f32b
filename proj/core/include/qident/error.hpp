#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qident {

enum class ErrorKind {
  NonzeroRemainder,
  DivisionByZero,
  NonInvertible,
  InvalidExponent,
  NegativeExponent,
  DivergentSpec,
  NonIntegralExponent,
  IllSpecialized,
  ConventionMismatch,
  UnknownIdentity,
  UnknownSeed,
  ParamsOutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qident
