#include "zetaforge/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "zetaforge/error.hpp"

namespace zetaforge {

IntPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial of level < 1");
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, all monic.
  IntPoly p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly q = cyclotomic_polynomial(d);
    IntPoly quot(p.size() - q.size() + 1, Integer(0));
    while (p.size() >= q.size() && !p.empty()) {
      const std::size_t shift = p.size() - q.size();
      const Integer f = p.back();
      quot[shift] = f;
      for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
      p = trimmed(std::move(p));
    }
    p = trimmed(std::move(quot));
  }
  return p;
}

CyclotomicNumber::CyclotomicNumber(const Rational& value) : level_(1) {
  if (value != 0) coeffs_.push_back(value);
}

CyclotomicNumber::CyclotomicNumber(long level, RatPoly coefficients)
    : level_(level), coeffs_(std::move(coefficients)) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic level < 1");
  reduce();
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long level, long k) {
  const long e = ((k % level) + level) % level;
  RatPoly c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return {level, std::move(c)};
}

void CyclotomicNumber::reduce() {
  const IntPoly phi = cyclotomic_polynomial(level_);
  while (coeffs_.size() >= phi.size()) {
    const std::size_t shift = coeffs_.size() - phi.size();
    const Rational f = coeffs_.back();
    for (std::size_t i = 0; i < phi.size(); ++i) coeffs_[shift + i] -= f * Rational(phi[i]);
    coeffs_.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (auto& c : coeffs_) c.canonicalize();
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorCode::RationalityFailure, "cyclotomic number " + to_string() + " is not rational");
  }
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift(long m) const {
  if (m % level_ != 0) throw Error(ErrorCode::InvalidArgument, "lift to a level that is not a multiple");
  if (m == level_) return *this;
  const long step = m / level_;
  RatPoly c(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * static_cast<std::size_t>(step) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return {m, std::move(c)};
}

CyclotomicNumber CyclotomicNumber::conj() const {
  RatPoly c(static_cast<std::size_t>(level_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::size_t j = i == 0 ? 0 : static_cast<std::size_t>(level_) - i;
    c[j] += coeffs_[i];
  }
  return {level_, std::move(c)};
}

Complex CyclotomicNumber::to_complex(mpfr_prec_t bits) const {
  Complex z(bits);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    z += Complex::unit_root(static_cast<long>(i), level_, bits) * Real(coeffs_[i], bits);
  }
  return z;
}

namespace {

long common_level(long a, long b) { return std::lcm(a, b); }

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  const long m = common_level(level_, o.level_);
  CyclotomicNumber a = lift(m), b = o.lift(m);
  if (a.coeffs_.size() < b.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.reduce();
  return *this = std::move(a);
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  CyclotomicNumber neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  const long m = common_level(level_, o.level_);
  const CyclotomicNumber a = lift(m), b = o.lift(m);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return *this = CyclotomicNumber(m, {});
  RatPoly c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return *this = CyclotomicNumber(m, std::move(c));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return (a - b).is_zero(); }

std::string CyclotomicNumber::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << coeffs_[i];
    if (i > 0) out << "*z" << level_ << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return out.str();
}

}  // namespace zetaforge
