#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padyn {

/// Machine-readable failure categories. The CLI surfaces these verbatim.
enum class ErrorCode {
  PrimeMismatch,
  DivisionByZero,
  PrecisionExhausted,
  RangeError,
  InternalInconsistency,
  HypothesisFailed,
  NoConvergence,
  NoRootInRegion,
  DomainNotInvariant,
  SizeGuard,
  NotACycle,
  ZeroParameter,
  PreconditionViolated,
  RegimeMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padyn
