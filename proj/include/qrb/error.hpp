#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrb {

enum class ErrorCode {
  kInvalidParameter,
  kDomain,                  // argument outside an operation's admissible region
  kOutsideDomain,           // psi queried inside |z| <= e^sigma
  kNoConvergence,
  kDegenerateDerivative,
  kNotInEscapingSet,
  kBranchAmbiguity,
  kBranchPoint,
  kMultipleRoots,
  kInconclusive,
  kConfig,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kOutsideDomain: return "OutsideDomain";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDegenerateDerivative: return "DegenerateDerivative";
    case ErrorCode::kNotInEscapingSet: return "NotInEscapingSet";
    case ErrorCode::kBranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::kBranchPoint: return "BranchPoint";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kInconclusive: return "Inconclusive";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace qrb
