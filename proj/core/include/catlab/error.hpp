#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

enum class ErrorCode {
  // validation
  MissingComposite,
  AssociativityViolation,
  IdentityViolation,
  DanglingReference,
  CompositionViolation,
  NotAFunctor,
  NotNatural,
  NotADiagram,
  // preconditions
  UnknownObject,
  UnknownMorphism,
  SourceTargetMismatch,
  TargetMismatch,
  FiberMismatch,
  IllTyped,
  // resources
  BudgetExceeded,
  UnknownSuite,
  // file format
  SyntaxError,
  UnknownKind,
  VersionUnsupported,
  InvalidDocument,
};

const char* error_code_name(ErrorCode c);

// Thrown on precondition violations and unrecoverable input errors.
// Validation-style operations report violations as data instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catlab
