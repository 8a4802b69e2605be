#pragma once

// Checks of the finite-characteristic special-value formalism: the order
// formula for |zeta(X, n)|, the trace formula against point counts, and the
// l-adic and p-adic valuation identities.

#include <map>
#include <string>

#include <json.hpp>

#include "zetaforge/scheme.hpp"

namespace zetaforge {

struct VerificationReport {
  std::string claim;
  /// Exact values in canonical text form ("-1/3", "[1, 2, 4]", ...).
  std::string left;
  std::string right;
  bool pass = false;
  std::map<std::string, std::string> context;

  nlohmann::json to_json() const;
};

/// |zeta(X, n)| against chi_x(X, n).
VerificationReport verify_C_finite_char(const SchemeExpr& e, long n);

/// #X(F_{q^k}) for a single base q (MixedBase otherwise).
Integer point_count(const SchemeExpr& e, long k);

/// Taylor coefficients of zeta_of(e) against exp(sum_{k <= K} N_k t^k / k).
VerificationReport trace_formula_check(const SchemeExpr& e, long K);

/// |zeta(X, n)|_l against prod_i (l-part of |H^i|)^{(-1)^{i+1}}.
/// Throws GradedDataUnavailable below Glue or Minus.
VerificationReport ell_adic_check(const SchemeExpr& e, long n, long ell);

/// v_p(zeta(X, n)) = 0 for the characteristic p (MixedBase if not unique).
VerificationReport p_part_check(const SchemeExpr& e, long n);

/// The characteristic shared by every base of e.
Integer characteristic(const SchemeExpr& e);

}  // namespace zetaforge
