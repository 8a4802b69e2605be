#include "zetaforge/zetarep.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zetaforge/error.hpp"

namespace zetaforge {

std::string FiniteCharFactor::key() const { return "q=" + q.get_str() + " Z=" + Z.to_string(); }

std::string LFactorShifted::key() const { return chi.key() + " shift=" + std::to_string(shift); }

namespace {

// Merge two sorted term lists, adding exponents and dropping zeros.
template <typename Term>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, long sign_b) {
  std::map<std::string, Term> by_key;
  for (const auto& t : a) by_key.emplace(t.first.key(), t);
  for (const auto& t : b) {
    auto [it, fresh] = by_key.emplace(t.first.key(), Term{t.first, sign_b * t.second});
    if (!fresh) it->second.second += sign_b * t.second;
  }
  std::vector<Term> out;
  for (auto& [key, term] : by_key)
    if (term.second != 0) out.push_back(std::move(term));
  return out;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rational_pow(const Rational& x, long e) {
  Rational base = e >= 0 ? x : Rational(1) / x;
  const auto k = static_cast<unsigned long>(e >= 0 ? e : -e);
  Rational r(int_pow(base.get_num(), k), int_pow(base.get_den(), k));
  r.canonicalize();
  return r;
}

CyclotomicNumber cyclotomic_pow(const CyclotomicNumber& x, long e) {
  CyclotomicNumber r(Rational(1));
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

ZetaProduct ZetaProduct::finite(const Integer& q, RationalFunction Z) {
  ZetaProduct z;
  if (Z == RationalFunction()) return z;
  z.finite_.push_back({FiniteCharFactor{q, std::move(Z)}, 1});
  return z;
}

ZetaProduct ZetaProduct::l_factor(const DirichletCharacter& chi, long shift) {
  if (shift < 0) throw Error(ErrorCode::InvalidArgument, "L-factor shift must be nonnegative");
  ZetaProduct z;
  z.char_zero_.push_back({LFactorShifted{chi.primitive(), shift}, 1});
  return z;
}

std::vector<Integer> ZetaProduct::bases() const {
  std::set<Integer> qs;
  for (const auto& [f, e] : finite_) qs.insert(f.q);
  return {qs.begin(), qs.end()};
}

std::string ZetaProduct::to_string() const {
  if (is_one()) return "1";
  std::string s;
  auto append = [&s](const std::string& factor, long e) {
    if (!s.empty()) s += " * ";
    s += factor;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (const auto& [f, e] : finite_) append("Z_" + f.q.get_str() + f.Z.to_string(), e);
  for (const auto& [l, e] : char_zero_) {
    const std::string arg = l.shift == 0 ? "s" : "s-" + std::to_string(l.shift);
    append("L(" + arg + ", " + l.chi.key() + ")", e);
  }
  return s;
}

ZetaProduct multiply(const ZetaProduct& a, const ZetaProduct& b) {
  ZetaProduct out;
  out.finite_ = merge_terms(a.finite_, b.finite_, 1);
  out.char_zero_ = merge_terms(a.char_zero_, b.char_zero_, 1);
  return out;
}

ZetaProduct inverse(const ZetaProduct& z) {
  ZetaProduct out;
  out.finite_ = merge_terms({}, z.finite_, -1);
  out.char_zero_ = merge_terms({}, z.char_zero_, -1);
  return out;
}

ZetaProduct shift_s(const ZetaProduct& z, long r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "shift_s needs r >= 0");
  if (r == 0) return z;
  ZetaProduct out;
  std::vector<ZetaProduct::FiniteTerm> finite;
  for (const auto& [f, e] : z.finite_) {
    const Integer scale = int_pow(f.q, static_cast<unsigned long>(r));
    finite.push_back({FiniteCharFactor{f.q, f.Z.substitute_scaled(scale)}, e});
  }
  std::vector<ZetaProduct::LTerm> lterms;
  for (const auto& [l, e] : z.char_zero_) lterms.push_back({LFactorShifted{l.chi, l.shift + r}, e});
  // Rekeying can only reorder, never collide: the substitution is injective.
  out.finite_ = merge_terms(finite, {}, 1);
  out.char_zero_ = merge_terms(lterms, {}, 1);
  return out;
}

long order_at(const ZetaProduct& z, long n) {
  if (n >= 0) throw Error(ErrorCode::InvalidArgument, "zeta data is evaluated at n < 0");
  long order = 0;
  for (const auto& [l, e] : z.char_zero()) order += e * trivial_zero_order(l.chi, n - l.shift);
  return order;
}

SpecialValue evaluate_at(const ZetaProduct& z, long n, long digits) {
  if (n >= 0) throw Error(ErrorCode::InvalidArgument, "zeta data is evaluated at n < 0");
  if (digits < 1) throw Error(ErrorCode::InvalidArgument, "precision must be at least one digit");
  const mpfr_prec_t bits = digits_to_bits(digits + 30);

  Rational finite_value = 1;
  for (const auto& [f, e] : z.finite_char()) {
    const Rational t(int_pow(f.q, static_cast<unsigned long>(-n)));
    const Rational num = evaluate(f.Z.numerator(), t);
    const Rational den = evaluate(f.Z.denominator(), t);
    if (num == 0 || den == 0) {
      throw Error(ErrorCode::WeilViolation, "factor " + f.key() + " has a " + (num == 0 ? "zero" : "pole") +
                                                " at t = " + t.get_str() + " (s = " + std::to_string(n) + ")");
    }
    finite_value *= rational_pow(num / den, e);
  }

  SpecialValue out;
  out.order = 0;
  CyclotomicNumber exact_num(Rational(1));
  CyclotomicNumber exact_den(Rational(1));
  bool exact = true;
  ComplexBall ball(Complex(Real(finite_value, bits)), Real(bits));
  for (const auto& [l, e] : z.char_zero()) {
    LeadingValue lv = leading_value(l.chi, n - l.shift, digits);
    out.order += e * lv.order;
    if (lv.exact) {
      (e > 0 ? exact_num : exact_den) *= cyclotomic_pow(*lv.exact, e > 0 ? e : -e);
    } else {
      exact = false;
    }
    ball = ball * pow(ComplexBall(std::move(lv.value), std::move(lv.error_bound)), e);
  }

  const Real slack = Real::power_of_ten(-(digits + 20), bits) * max(ball.mid.abs(), Real(1, bits));
  ball.radius += slack;
  if (ball.radius < abs(ball.mid.im)) {
    throw Error(ErrorCode::RationalityFailure, "leading value of " + z.to_string() + " is not real");
  }
  if (exact) {
    out.exact = finite_value * exact_num.rational_value() / exact_den.rational_value();
    out.exact->canonicalize();
    out.numeric = Real(*out.exact, bits);
    out.error_bound = Real(bits);
  } else {
    out.numeric = ball.mid.re;
    out.error_bound = ball.radius;
  }
  return out;
}

Series power_series(const FiniteCharFactor& f, long K) { return f.Z.power_series(K); }

Series power_series(const ZetaProduct& z, long K) {
  if (!z.is_finite_characteristic()) {
    throw Error(ErrorCode::CharZeroAtom, "series in t needs a finite-characteristic zeta function");
  }
  if (z.bases().size() > 1) {
    throw Error(ErrorCode::MixedBase, "factors over several bases have no common variable t");
  }
  Series acc(static_cast<std::size_t>(K) + 1, Rational(0));
  acc[0] = 1;
  for (const auto& [f, e] : z.finite_char()) {
    const Series s = (e > 0 ? f.Z : f.Z.inverse()).power_series(K);
    for (long i = 0; i < (e > 0 ? e : -e); ++i) acc = multiply_series(acc, s);
  }
  return acc;
}

}  // namespace zetaforge
