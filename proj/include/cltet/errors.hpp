#pragma once

#include <stdexcept>
#include <string>

namespace cltet {

enum class Errc {
  ZeroDivisor,
  PoleAt,
  DomainError,
  NormalizationFailure,
  BaseMismatch,
  NotComparable,
  DegenerateNormal,
  NoIntersection,
  NotLightlike,
  NoCommonPoint,
  NotSpacelikeConnected,
  Degenerate,
  WrongCausalClass,
  Inadmissible,
  NotATetrahedron,
  ChartInversionFailure,
  ToleranceNotReached,
  ConvergenceWarning,
  LambdaMismatch,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::PoleAt: return "PoleAt";
    case Errc::DomainError: return "DomainError";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotComparable: return "NotComparable";
    case Errc::DegenerateNormal: return "DegenerateNormal";
    case Errc::NoIntersection: return "NoIntersection";
    case Errc::NotLightlike: return "NotLightlike";
    case Errc::NoCommonPoint: return "NoCommonPoint";
    case Errc::NotSpacelikeConnected: return "NotSpacelikeConnected";
    case Errc::Degenerate: return "Degenerate";
    case Errc::WrongCausalClass: return "WrongCausalClass";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::NotATetrahedron: return "NotATetrahedron";
    case Errc::ChartInversionFailure: return "ChartInversionFailure";
    case Errc::ToleranceNotReached: return "ToleranceNotReached";
    case Errc::ConvergenceWarning: return "ConvergenceWarning";
    case Errc::LambdaMismatch: return "LambdaMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Single exception type for the library; the code names the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

/// Raised by the cubature when the requested tolerance cannot be met.
class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(double best, double err, const std::string& what)
      : Error(Errc::ToleranceNotReached, what), best_(best), err_(err) {}

  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double best_;
  double err_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cltet
