#pragma once

// Dense univariate polynomials in t over Z and Q, and the reduced rational
// functions Z(t) used for finite-characteristic zeta factors.

#include <string>
#include <vector>

#include "zetaforge/intlinalg.hpp"

namespace zetaforge {

/// Coefficients from t^0 upwards; no trailing zeros (the zero polynomial is empty).
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;
/// Truncated power series, coefficients of t^0 .. t^K.
using Series = std::vector<Rational>;

IntPoly trimmed(IntPoly p);
long degree(const IntPoly& p);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
Rational evaluate(const IntPoly& p, const Rational& t);
Integer content(const IntPoly& p);
/// p(c t).
IntPoly scale_variable(const IntPoly& p, const Integer& c);
/// p(t^m).
IntPoly inflate(const IntPoly& p, long m);
std::string to_string(const IntPoly& p);

/// Coefficients of p(t) / q(t) up to t^order; q(0) != 0.
Series divide_series(const IntPoly& p, const IntPoly& q, long order);
Series multiply_series(const Series& a, const Series& b);
/// exp(f) for f(0) = 0, exact, to the length of f.
Series exp_series(const Series& f);

/// num(t) / den(t) with num, den in Z[t], no common polynomial factor, nonzero
/// constant terms, den(0) > 0 and coprime contents.
class RationalFunction {
 public:
  RationalFunction() : num_{Integer(1)}, den_{Integer(1)} {}
  /// Throws InvalidArgument when a constant term vanishes.
  RationalFunction(IntPoly num, IntPoly den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  RationalFunction inverse() const { return {den_, num_}; }
  RationalFunction substitute_scaled(const Integer& c) const;
  Series power_series(long order) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  std::string to_string() const;

 private:
  IntPoly num_;
  IntPoly den_;
};

}  // namespace zetaforge
