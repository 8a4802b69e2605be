#pragma once

// Owning wrapper around mpfr_t with explicit per-value precision. Results of
// binary operations carry the larger operand precision; nothing is ambient.

#include <mpfr.h>

#include <string>

#include "zetaforge/intlinalg.hpp"

namespace zetaforge {

/// Bits needed for `digits` decimal digits.
mpfr_prec_t digits_to_bits(long digits);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const Integer& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(long digits) const;

  static Real pi(mpfr_prec_t bits);
  /// 10^exponent.
  static Real power_of_ten(long exponent, mpfr_prec_t bits);

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real gamma(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
/// Riemann zeta at real x != 1.
Real riemann_zeta(const Real& x);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(r), im(r.precision()) {}

  static Complex unit_root(long k, long n, mpfr_prec_t bits);

  Complex conj() const { return {re, -im}; }
  Real abs() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

Complex pow(const Complex& z, long exponent);

/// A complex midpoint with a radius bounding its distance to the true value.
struct ComplexBall {
  Complex mid;
  Real radius;

  ComplexBall(Complex m, Real r) : mid(std::move(m)), radius(std::move(r)) {}
};

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
/// Exact reciprocal bound; requires |mid| > radius.
ComplexBall reciprocal(const ComplexBall& a);
ComplexBall pow(const ComplexBall& a, long exponent);

}  // namespace zetaforge
