#include "qident/error.hpp"

namespace qident {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::DivergentSpec: return "DivergentSpec";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::IllSpecialized: return "IllSpecialized";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::UnknownSeed: return "UnknownSeed";
    case ErrorKind::ParamsOutOfRange: return "ParamsOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace qident
