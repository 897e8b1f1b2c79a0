#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phimod {

enum class ErrorKind {
  DivisionByZero,
  ZeroElement,
  SpecMismatch,
  UncertifiedField,
  FieldTooSmall,
  NotInvertible,
  InvalidInput,
  InvalidGroup,
  NotCanonicalized,
  MonodromyMismatch,
  OrbitMismatch,
  BadSeed,
  WeightMismatch,
  PreconditionMismatch,
  ResultingNegativeWeight,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a root or eigenvalue needed by a construction is not in E.
/// `hint()` names the missing quantity so callers can extend the field or
/// pass a witness.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(const std::string& what, std::string hint)
      : Error(ErrorKind::FieldTooSmall, what), hint_(std::move(hint)) {}
  const std::string& hint() const noexcept { return hint_; }

 private:
  std::string hint_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace phimod
