#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srsdual {

enum class ErrorKind {
  Syntax,
  EmptyLhs,
  FuelExhausted,
  SymbolOutsideAlphabet,
  AlphabetMismatch,
  NotDwindling,
  NotMonadic,
  NotInterReduced,
  NotConvergent,
  AlphaReducible,
  AlphaEmpty,
  InputReducible,
  DegenerateInput,
  VerificationFailed,
  MalformedInstance,
  NotASolution,
  Nondeterministic,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace srsdual
