#include "poncelet/error.hpp"

namespace poncelet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::RootToleranceExceeded: return "RootToleranceExceeded";
    case ErrorKind::CayleyViolation: return "CayleyViolation";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::CenterSingularity: return "CenterSingularity";
    case ErrorKind::CollinearVertices: return "CollinearVertices";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::OnCircumcircle: return "OnCircumcircle";
    case ErrorKind::RealnessViolation: return "RealnessViolation";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::AmbiguousBoundary: return "AmbiguousBoundary";
    case ErrorKind::NoRealTangents: return "NoRealTangents";
  }
  return "Unknown";
}

}  // namespace poncelet
