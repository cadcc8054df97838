#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorKind {
  DegenerateInput,
  SingularMap,
  DegenerateConic,
  RootToleranceExceeded,
  CayleyViolation,
  NotNested,
  InvalidFamily,
  CenterSingularity,
  CollinearVertices,
  HypothesisViolation,
  OnCircumcircle,
  RealnessViolation,
  DegenerateDenominator,
  DegenerateConfiguration,
  AmbiguousBoundary,
  NoRealTangents,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace poncelet
