#pragma once

#include <stdexcept>
#include <string>

namespace carma {

enum class ErrorKind {
  UnboundName,
  UnboundAttribute,
  TypeMismatch,
  DivisionByZero,
  ArityMismatch,
  InvalidRate,
  InvalidProbability,
  MalformedUpdate,
  UndefinedConstant,
  UnguardedRecursion,
  DuplicateAttribute,
  Semantic,
};

const char* errorKindName(ErrorKind kind);

/// Raised when a model cannot be evaluated: unbound names, ill-typed
/// operands, environment functions out of range. Aborts the current
/// derivation; never converted into a zero-rate transition.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace carma
