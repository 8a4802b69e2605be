#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaforge {

enum class ErrorCode {
  InvalidArgument,
  InfiniteGroup,
  ZeroValuation,
  InfiniteCohomology,
  MalformedComplex,
  NonChainMap,
  WeilViolation,
  CharZeroAtom,
  MixedBase,
  GradedDataUnavailable,
  EulerOnlyData,
  PrecisionUnderflow,
  RationalityFailure,
  InternalConsistency,
  SyntaxError,
  ArityError,
  NotPrimePower,
  Io,
};

/// Stable machine-readable name, e.g. "weil-violation".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zetaforge
