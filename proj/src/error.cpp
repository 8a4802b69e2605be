#include "zetaforge/error.hpp"

namespace zetaforge {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InfiniteGroup: return "infinite-group";
    case ErrorCode::ZeroValuation: return "zero-valuation";
    case ErrorCode::InfiniteCohomology: return "infinite-cohomology";
    case ErrorCode::MalformedComplex: return "malformed-complex";
    case ErrorCode::NonChainMap: return "non-chain-map";
    case ErrorCode::WeilViolation: return "weil-violation";
    case ErrorCode::CharZeroAtom: return "char-zero-atom";
    case ErrorCode::MixedBase: return "mixed-base";
    case ErrorCode::GradedDataUnavailable: return "graded-data-unavailable";
    case ErrorCode::EulerOnlyData: return "euler-only-data";
    case ErrorCode::PrecisionUnderflow: return "precision-underflow";
    case ErrorCode::RationalityFailure: return "rationality-failure";
    case ErrorCode::InternalConsistency: return "internal-consistency";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::ArityError: return "arity-error";
    case ErrorCode::NotPrimePower: return "not-prime-power";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace zetaforge
