#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace growthlab {

enum class ErrorKind {
  InvalidArgument,
  InvalidSpec,
  NonConvergentSeries,
  PoleHit,
  ZerosUnknown,
  SingularityUnresolved,
  ProfileCoverage,
  Divergent,
  QuadratureStall,
  TailUndeclared,
  OriginPoint,
  GenusTooSmall,
  NegativeCount,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind);

/// Every numerical failure in the library is reported through this type;
/// callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NonConvergentSeries: return "NonConvergentSeries";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::ZerosUnknown: return "ZerosUnknown";
    case ErrorKind::SingularityUnresolved: return "SingularityUnresolved";
    case ErrorKind::ProfileCoverage: return "ProfileCoverage";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::QuadratureStall: return "QuadratureStall";
    case ErrorKind::TailUndeclared: return "TailUndeclared";
    case ErrorKind::OriginPoint: return "OriginPoint";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace growthlab
