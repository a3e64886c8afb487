#include "schemeconn/error.hpp"

namespace schemeconn {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotClosedUnderTranspose: return "NotClosedUnderTranspose";
    case ErrorKind::NonConstantIntersection: return "NonConstantIntersection";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::IdentityClassRequested: return "IdentityClassRequested";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DisconnectedPair: return "DisconnectedPair";
    case ErrorKind::LiftImpossible: return "LiftImpossible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::PreconditionUnverifiable: return "PreconditionUnverifiable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RefinementFailed: return "RefinementFailed";
    case ErrorKind::DetectorDisagreement: return "DetectorDisagreement";
  }
  return "Unknown";
}

SchemeError::SchemeError(ErrorKind kind, const std::string& message,
                         std::string witness)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace schemeconn
