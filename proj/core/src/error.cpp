#include "srsdual/error.hpp"

namespace srsdual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::EmptyLhs: return "empty-lhs";
    case ErrorKind::FuelExhausted: return "fuel-exhausted";
    case ErrorKind::SymbolOutsideAlphabet: return "symbol-outside-alphabet";
    case ErrorKind::AlphabetMismatch: return "alphabet-mismatch";
    case ErrorKind::NotDwindling: return "not-dwindling";
    case ErrorKind::NotMonadic: return "not-monadic";
    case ErrorKind::NotInterReduced: return "not-inter-reduced";
    case ErrorKind::NotConvergent: return "not-convergent";
    case ErrorKind::AlphaReducible: return "alpha-reducible";
    case ErrorKind::AlphaEmpty: return "alpha-empty";
    case ErrorKind::InputReducible: return "input-reducible";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::VerificationFailed: return "verification-failed";
    case ErrorKind::MalformedInstance: return "malformed-instance";
    case ErrorKind::NotASolution: return "not-a-solution";
    case ErrorKind::Nondeterministic: return "nondeterministic";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace srsdual
