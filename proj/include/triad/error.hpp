#pragma once

#include <stdexcept>
#include <string>

namespace triad {

enum class ErrorKind {
  InvalidAtom,
  DanglingPair,
  UnknownElement,
  PartialMap,
  NonComposable,
  UnknownObject,
  NotSinglenamed,
  NotFunctional,
  BadNumeral,
  TokenClash,
  DuplicateId,
  DegreeOutOfScale,
  InvalidLattice,
  UnknownSymbol,
  NotDeterministic,
  UnknownReference,
  InvariantViolation,
  Io,
};

const char* to_string(ErrorKind kind);

/// Thrown by operations whose preconditions or input invariants are violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace triad
