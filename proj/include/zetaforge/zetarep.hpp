#pragma once

// Zeta functions as formal products of finite-characteristic factors
// Z(q^{-s}) and shifted Dirichlet L-factors L(s - k, chi).

#include <string>
#include <utility>
#include <vector>

#include "zetaforge/lfunctions.hpp"
#include "zetaforge/polynomial.hpp"
#include "zetaforge/special_value.hpp"

namespace zetaforge {

inline constexpr long kDefaultPrecision = 50;

/// Z(t) read at t = q^{-s}.
struct FiniteCharFactor {
  Integer q;
  RationalFunction Z;

  std::string key() const;
  friend bool operator==(const FiniteCharFactor&, const FiniteCharFactor&) = default;
};

/// L(s - shift, chi) for a primitive chi.
struct LFactorShifted {
  DirichletCharacter chi;
  long shift = 0;

  std::string key() const;
  friend bool operator==(const LFactorShifted&, const LFactorShifted&) = default;
};

class ZetaProduct {
 public:
  using FiniteTerm = std::pair<FiniteCharFactor, long>;
  using LTerm = std::pair<LFactorShifted, long>;

  /// The constant 1.
  ZetaProduct() = default;
  static ZetaProduct finite(const Integer& q, RationalFunction Z);
  /// L(s - shift, chi); chi is replaced by its primitive core.
  static ZetaProduct l_factor(const DirichletCharacter& chi, long shift = 0);

  /// Sorted by key; exponents are nonzero and keys distinct.
  const std::vector<FiniteTerm>& finite_char() const { return finite_; }
  const std::vector<LTerm>& char_zero() const { return char_zero_; }

  bool is_one() const { return finite_.empty() && char_zero_.empty(); }
  bool is_finite_characteristic() const { return char_zero_.empty(); }
  /// Distinct q over all finite-characteristic factors, ascending.
  std::vector<Integer> bases() const;

  std::string to_string() const;

  friend bool operator==(const ZetaProduct&, const ZetaProduct&) = default;
  friend ZetaProduct multiply(const ZetaProduct& a, const ZetaProduct& b);
  friend ZetaProduct inverse(const ZetaProduct& z);
  friend ZetaProduct shift_s(const ZetaProduct& z, long r);

 private:
  std::vector<FiniteTerm> finite_;
  std::vector<LTerm> char_zero_;
};

ZetaProduct multiply(const ZetaProduct& a, const ZetaProduct& b);
ZetaProduct inverse(const ZetaProduct& z);
/// zeta(s - r): t -> q^r t on finite factors, shift += r on L-factors.
ZetaProduct shift_s(const ZetaProduct& z, long r);

/// Sum over L-factors of exponent * trivial-zero order at s = n < 0.
long order_at(const ZetaProduct& z, long n);

/// Order and leading coefficient at s = n < 0. Finite-characteristic
/// factors are evaluated exactly at t = q^{-n}; a zero or pole there raises
/// WeilViolation. The value is exact iff every L-factor is nonvanishing.
SpecialValue evaluate_at(const ZetaProduct& z, long n, long digits = kDefaultPrecision);

/// Taylor coefficients of Z(t) up to t^K.
Series power_series(const FiniteCharFactor& f, long K);

/// Taylor coefficients in t of the whole product up to t^K. Requires a
/// finite-characteristic product over a single base (MixedBase, CharZeroAtom).
Series power_series(const ZetaProduct& z, long K);

}  // namespace zetaforge
