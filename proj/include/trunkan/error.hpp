#pragma once

#include <stdexcept>
#include <string>

namespace trunkan {

enum class ErrorKind {
  IdentityViolation,
  MissingMap,
  IndexOutOfRange,
  DimensionMismatch,
  AxiomPrereqFailed,
  NoFiller,
  NotUnique,
  NotFullyFaithful,
  NoMediator,
  MiddleMismatch,
  NotCoherent,
  NoCandidate,
  NotAGroup,
  InvalidCrossedModule,
  BoundsExceeded,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trunkan
