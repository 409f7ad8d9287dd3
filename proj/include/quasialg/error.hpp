#pragma once

#include <stdexcept>
#include <string>

namespace quasialg {

enum class Errc {
  ConductorMismatch,
  DivisionByZero,
  GroupMismatch,
  AlgebraMismatch,
  NotAssociative,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  ZeroValue,
  InvalidParameter,
  NotHomogeneous,
  NotAUnit,
  NonUnitAlpha,
  NonAutomorphismSigma,
  NotQuasicrossed,
  IncompatibleSystems,
  IncompatibleBase,
  NotInvolution,
  NotStrong,
  NotAbelian,
  ZeroEpsilon,
  MissingAction,
  SyntaxError,
  UnknownReference,
  DuplicateSection,
};

const char* errc_name(Errc c);

/// Library-wide exception: an error code plus a human-readable message that
/// names the offending witness (triple, row, line number, ...) where one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace quasialg
