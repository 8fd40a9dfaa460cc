#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatcode {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  TowerTooDeep,
  DivisionByZero,
  ContextMismatch,
  InvalidArgument,
  Unsupported,
  ZeroConstantTerm,
  NotSquarefree,
  GcdViolation,
  NotADivisor,
  NotALeftIdeal,
  SingularSystem,
  AuditFailed,
  NotIdempotent,
  CaseMismatch,
  InvalidClass,
  BadDivisor,
  LemmaMismatch,
  TheoremMismatch,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quatcode
