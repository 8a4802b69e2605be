#pragma once

#include <string>

#include "zetaforge/polynomial.hpp"
#include "zetaforge/real.hpp"

namespace zetaforge {

/// Integer coefficients of the n-th cyclotomic polynomial.
IntPoly cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_N), stored as a rational polynomial in zeta_N
/// reduced modulo Phi_N. Arithmetic between different levels lifts both
/// operands to the lcm of the levels.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : level_(1) {}
  CyclotomicNumber(const Rational& value);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long level, RatPoly coefficients);

  static CyclotomicNumber root_of_unity(long level, long k);

  long level() const { return level_; }
  const RatPoly& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// Throws RationalityFailure if not rational.
  Rational rational_value() const;

  /// The same number written at level m, a multiple of level().
  CyclotomicNumber lift(long m) const;
  /// Complex conjugate, zeta -> zeta^{-1}.
  CyclotomicNumber conj() const;
  Complex to_complex(mpfr_prec_t bits) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

  /// Equality as field elements, independent of the level they are written at.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string to_string() const;

 private:
  void reduce();

  long level_;
  RatPoly coeffs_;
};

}  // namespace zetaforge
