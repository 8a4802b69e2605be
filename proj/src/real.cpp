#include "zetaforge/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetaforge/error.hpp"

namespace zetaforge {

mpfr_prec_t digits_to_bits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(std::max(digits, 1L)) * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other.precision()) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(long digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (is_zero()) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(std::max(digits - 1, 0L)), value_);
  return std::string(buf.data());
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::power_of_ten(long exponent, mpfr_prec_t bits) {
  Real r(10, bits);
  mpfr_pow_si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

namespace {

// Raise the precision of `target` to at least that of `other` before a binary op.
void widen(Real& target, const Real& other) {
  if (other.precision() > target.precision()) mpfr_prec_round(target.get(), other.precision(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r(a);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

#define ZETAFORGE_UNARY(name, fn)          \
  Real name(const Real& x) {               \
    Real r(x.precision());                 \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }

ZETAFORGE_UNARY(abs, mpfr_abs)
ZETAFORGE_UNARY(sqrt, mpfr_sqrt)
ZETAFORGE_UNARY(exp, mpfr_exp)
ZETAFORGE_UNARY(log, mpfr_log)
ZETAFORGE_UNARY(gamma, mpfr_gamma)
ZETAFORGE_UNARY(sin, mpfr_sin)
ZETAFORGE_UNARY(cos, mpfr_cos)
ZETAFORGE_UNARY(riemann_zeta, mpfr_zeta)

#undef ZETAFORGE_UNARY

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex Complex::unit_root(long k, long n, mpfr_prec_t bits) {
  Real angle = Real::pi(bits) * Real(2 * (((k % n) + n) % n), bits) / Real(n, bits);
  return {cos(angle), sin(angle)};
}

Real Complex::abs() const { return sqrt(re * re + im * im); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real denom = o.re * o.re + o.im * o.im;
  if (denom.is_zero()) throw Error(ErrorCode::InvalidArgument, "complex division by zero");
  Real r = (re * o.re + im * o.im) / denom;
  Real i = (im * o.re - re * o.im) / denom;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex pow(const Complex& z, long exponent) {
  Complex result(Real(1, z.re.precision()));
  Complex base = exponent >= 0 ? z : Complex(Real(1, z.re.precision())) / z;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent) : static_cast<unsigned long>(-exponent);
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  Real ra = a.mid.abs();
  Real rb = b.mid.abs();
  return {a.mid * b.mid, ra * b.radius + rb * a.radius + a.radius * b.radius};
}

ComplexBall reciprocal(const ComplexBall& a) {
  Real m = a.mid.abs();
  if (!(a.radius < m)) {
    throw Error(ErrorCode::PrecisionUnderflow, "cannot invert a ball containing zero");
  }
  const mpfr_prec_t bits = a.mid.re.precision();
  Complex inv = Complex(Real(1, bits)) / a.mid;
  // |1/z - 1/w| <= r / (|w| (|w| - r))
  return {inv, a.radius / (m * (m - a.radius))};
}

ComplexBall pow(const ComplexBall& a, long exponent) {
  const mpfr_prec_t bits = a.mid.re.precision();
  ComplexBall result(Complex(Real(1, bits)), Real(bits));
  ComplexBall base = exponent >= 0 ? a : reciprocal(a);
  long e = exponent >= 0 ? exponent : -exponent;
  for (long i = 0; i < e; ++i) result = result * base;
  return result;
}

}  // namespace zetaforge
