#pragma once

// Dirichlet characters, generalized Bernoulli numbers, L-values at
// nonpositive integers, and Dedekind zeta functions of abelian fields given
// as fixed fields of subgroups H <= (Z/f)^x.

#include <optional>
#include <string>
#include <vector>

#include "zetaforge/cyclotomic.hpp"
#include "zetaforge/special_value.hpp"

namespace zetaforge {

/// Character of (Z/f)^x with values in the N-th roots of unity: the value
/// at a unit a is zeta_N^{k_a}. Non-units map to zero.
class DirichletCharacter {
 public:
  /// The character mod 1 (Riemann zeta).
  static DirichletCharacter trivial();

  /// `exponents[a]` is k_a for 0 <= a < modulus, or -1 for non-units.
  /// The order is reduced to the exact order of the character.
  DirichletCharacter(long modulus, long order, std::vector<long> exponents);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  std::optional<long> exponent(long a) const;
  /// chi(-1) as +1 or -1.
  int parity() const;
  bool is_trivial() const { return order_ == 1; }

  long conductor() const;
  DirichletCharacter primitive() const;
  DirichletCharacter conjugate() const;

  CyclotomicNumber value(long a) const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;
  friend bool operator<(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.key() < b.key();
  }
  /// Stable identifier, e.g. "chi[4;2:-,0,-,1]" (exponents at a = 0 .. f-1).
  std::string key() const;
  /// Short human label: "1" for the trivial character, "chi_4:-,0,-,1" otherwise.
  std::string label() const;

 private:
  long modulus_;
  long order_;
  std::vector<long> exponents_;
};

/// B_0 .. B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(long n);
/// B_k(x).
Rational bernoulli_polynomial(long k, const Rational& x, const std::vector<Rational>& bernoulli);

/// B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f) for the primitive core of chi.
CyclotomicNumber gen_bernoulli(const DirichletCharacter& chi, long k);

/// L(n, chi) = -B_{1-n,chi} / (1-n) for n <= 0 (primitive core).
CyclotomicNumber L_at_nonpositive(const DirichletCharacter& chi, long n);

/// 1 iff L(s, chi) has a trivial zero at s = n < 0. The parity rule is
/// checked against the exact value (InternalConsistency on mismatch).
int trivial_zero_order(const DirichletCharacter& chi, long n);

/// Hurwitz zeta(s, a) for real s != 1 and rational 0 < a <= 1 by
/// Euler-Maclaurin summation, accurate to about `digits` decimal digits.
Real hurwitz_zeta(const Real& s, const Rational& a, long digits);

/// L(s, chi) at real s > 1 from Hurwitz zeta values.
Complex dirichlet_L(const DirichletCharacter& chi, const Real& s, long digits);

/// Gauss sum tau(chi) = sum_a chi(a) e^{2 pi i a / f} (primitive core).
Complex gauss_sum(const DirichletCharacter& chi, mpfr_prec_t bits);

struct LeadingValue {
  int order = 0;
  Complex value;
  Real error_bound;
  /// Present iff order == 0.
  std::optional<CyclotomicNumber> exact;

  LeadingValue() : value(64), error_bound(64) {}
};

/// Leading Taylor coefficient of L(s, chi) at s = n < 0. At a trivial zero
/// the derivative comes from the functional equation with the root number
/// W = tau(chi) / (i^delta sqrt f). Throws PrecisionUnderflow when the
/// estimated error exceeds 10^{-digits}.
LeadingValue leading_value(const DirichletCharacter& chi, long n, long digits);

/// The fixed field of H <= (Z/f)^x. Construction enumerates its characters
/// (primitive cores of the characters of (Z/f)^x / H).
class AbelianFieldSpec {
 public:
  /// `generators` are residues mod `conductor` generating H; 1 may be omitted.
  /// Throws InvalidArgument for non-units or conductor < 1.
  AbelianFieldSpec(long conductor, const std::vector<long>& generators);

  static AbelianFieldSpec rationals() { return {1, {}}; }
  static AbelianFieldSpec gaussian() { return {4, {}}; }

  long conductor() const { return conductor_; }
  /// Full subgroup H, sorted, residues written in [1, f].
  const std::vector<long>& subgroup() const { return subgroup_; }
  const std::vector<DirichletCharacter>& characters() const { return characters_; }
  long degree() const { return static_cast<long>(characters_.size()); }
  long r1() const { return r1_; }
  long r2() const { return r2_; }

  friend bool operator==(const AbelianFieldSpec& a, const AbelianFieldSpec& b) {
    return a.conductor_ == b.conductor_ && a.subgroup_ == b.subgroup_;
  }

 private:
  long conductor_;
  std::vector<long> subgroup_;
  std::vector<DirichletCharacter> characters_;
  long r1_ = 0;
  long r2_ = 0;
};

/// Sum of trivial-zero orders over the field's characters; checked against
/// r2 (n odd) or r1 + r2 (n even).
long dedekind_order(const AbelianFieldSpec& field, long n);

/// zeta_F*(n): exact rational when the order is zero (RationalityFailure if
/// the cyclotomic product fails to be rational).
SpecialValue dedekind_special_value(const AbelianFieldSpec& field, long n, long digits);

}  // namespace zetaforge
