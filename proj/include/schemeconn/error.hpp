#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schemeconn {

enum class ErrorKind {
  // scheme-core
  NotAPartition,
  NotClosedUnderTranspose,
  NonConstantIntersection,
  NotCommutative,
  IdentityClassRequested,
  NotSymmetric,
  // catalog
  SizeCap,
  NotAGroup,
  NotDistanceRegular,
  ParseError,
  // graph algorithms
  Disconnected,
  DisconnectedPair,
  LiftImpossible,
  CapExceeded,
  HypothesisViolation,
  PreconditionUnverifiable,
  InvalidArgument,
  // spectral
  RefinementFailed,
  DetectorDisagreement,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library. `witness` carries a short
// machine-readable description of the offending data (indices, pairs).
class SchemeError : public std::runtime_error {
 public:
  SchemeError(ErrorKind kind, const std::string& message,
              std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace schemeconn
