#include "zetaforge/lfunctions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

bool is_unit(long a, long m) { return std::gcd(mod(a, m), m) == 1; }

}  // namespace

DirichletCharacter DirichletCharacter::trivial() { return {1, 1, {0}}; }

DirichletCharacter::DirichletCharacter(long modulus, long order, std::vector<long> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)) {
  if (modulus < 1 || order < 1 || static_cast<long>(exponents_.size()) != modulus) {
    throw Error(ErrorCode::InvalidArgument, "character table does not match its modulus");
  }
  long g = order_;
  for (long a = 0; a < modulus_; ++a) {
    auto& k = exponents_[static_cast<std::size_t>(a)];
    if (!is_unit(a, modulus_)) {
      k = -1;
      continue;
    }
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "character undefined at a unit");
    k = mod(k, order_);
    g = std::gcd(g, k);
  }
  if (exponents_[static_cast<std::size_t>(mod(1, modulus_))] != 0) {
    throw Error(ErrorCode::InvalidArgument, "character must send 1 to 1");
  }
  if (modulus_ <= 1000) {
    for (long a = 1; a < modulus_; ++a) {
      if (!is_unit(a, modulus_)) continue;
      for (long b = a; b < modulus_; ++b) {
        if (!is_unit(b, modulus_)) continue;
        const long ab = (a * b) % modulus_;
        if (mod(exponents_[static_cast<std::size_t>(a)] + exponents_[static_cast<std::size_t>(b)] -
                    exponents_[static_cast<std::size_t>(ab)],
                order_) != 0) {
          throw Error(ErrorCode::InvalidArgument, "character table is not multiplicative");
        }
      }
    }
  }
  if (g > 1) {
    order_ /= g;
    for (auto& k : exponents_)
      if (k >= 0) k /= g;
  }
}

std::optional<long> DirichletCharacter::exponent(long a) const {
  const long k = exponents_[static_cast<std::size_t>(mod(a, modulus_))];
  if (k < 0) return std::nullopt;
  return k;
}

int DirichletCharacter::parity() const {
  const long k = *exponent(-1);
  // k_{-1} is 0 or order/2.
  return k == 0 ? 1 : -1;
}

long DirichletCharacter::conductor() const {
  for (long d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool trivial_on_kernel = true;
    for (long a = 1; a <= modulus_ && trivial_on_kernel; a += d) {
      const long r = mod(a, modulus_);
      if (is_unit(r, modulus_) && exponents_[static_cast<std::size_t>(r)] != 0) trivial_on_kernel = false;
    }
    if (trivial_on_kernel) return d;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::primitive() const {
  const long d = conductor();
  if (d == modulus_) return *this;
  std::vector<long> table(static_cast<std::size_t>(d), -1);
  for (long b = 0; b < d; ++b) {
    if (!is_unit(b, d)) continue;
    for (long a = b; a < modulus_ + d; a += d) {
      if (is_unit(a, modulus_)) {
        table[static_cast<std::size_t>(b)] = exponents_[static_cast<std::size_t>(mod(a, modulus_))];
        break;
      }
    }
  }
  return {d, order_, std::move(table)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long> table = exponents_;
  for (auto& k : table)
    if (k > 0) k = order_ - k;
  return {modulus_, order_, std::move(table)};
}

CyclotomicNumber DirichletCharacter::value(long a) const {
  const auto k = exponent(a);
  if (!k) return CyclotomicNumber(Rational(0));
  return CyclotomicNumber::root_of_unity(order_, *k);
}

std::string DirichletCharacter::key() const {
  std::string s = "chi[" + std::to_string(modulus_) + ";" + std::to_string(order_) + ":";
  for (std::size_t a = 0; a < exponents_.size(); ++a) {
    if (a) s += ',';
    s += exponents_[a] < 0 ? std::string("-") : std::to_string(exponents_[a]);
  }
  return s + "]";
}

std::string DirichletCharacter::label() const {
  if (is_trivial()) return "1";
  return "chi_" + std::to_string(modulus_) + key().substr(key().find(':'));
}

std::vector<Rational> bernoulli_numbers(long n) {
  // Akiyama-Tanigawa; produces B_1 = +1/2, flipped at the end.
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, static_cast<unsigned long>(m + 1));
    for (long j = m; j >= 1; --j) {
      auto& lo = a[static_cast<std::size_t>(j - 1)];
      lo = Rational(j) * (lo - a[static_cast<std::size_t>(j)]);
    }
    b[static_cast<std::size_t>(m)] = a[0];
  }
  if (n >= 1) b[1] = -b[1];
  return b;
}

Rational bernoulli_polynomial(long k, const Rational& x, const std::vector<Rational>& bernoulli) {
  Rational acc = 0;
  Integer binom = 1;
  Rational xpow = 1;
  // sum_j C(k, j) B_{k-j} x^j
  for (long j = 0; j <= k; ++j) {
    acc += Rational(binom) * bernoulli[static_cast<std::size_t>(k - j)] * xpow;
    binom = binom * (k - j) / (j + 1);
    xpow *= x;
  }
  acc.canonicalize();
  return acc;
}

CyclotomicNumber gen_bernoulli(const DirichletCharacter& chi, long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "generalized Bernoulli number needs k >= 1");
  const DirichletCharacter p = chi.primitive();
  const long f = p.modulus();
  const auto bern = bernoulli_numbers(k);
  RatPoly coeffs(static_cast<std::size_t>(p.order()), Rational(0));
  for (long a = 1; a <= f; ++a) {
    const auto e = p.exponent(a);
    if (!e) continue;
    coeffs[static_cast<std::size_t>(*e)] += bernoulli_polynomial(k, Rational(a, static_cast<unsigned long>(f)), bern);
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(k - 1));
  for (auto& c : coeffs) c *= Rational(scale);
  return {p.order(), std::move(coeffs)};
}

CyclotomicNumber L_at_nonpositive(const DirichletCharacter& chi, long n) {
  if (n > 0) throw Error(ErrorCode::InvalidArgument, "L_at_nonpositive needs n <= 0");
  const long k = 1 - n;
  return gen_bernoulli(chi, k) * CyclotomicNumber(Rational(-1, static_cast<unsigned long>(k)));
}

int trivial_zero_order(const DirichletCharacter& chi, long n) {
  if (n >= 0) throw Error(ErrorCode::InvalidArgument, "trivial zeros are counted at n < 0");
  const DirichletCharacter p = chi.primitive();
  const int wanted = ((1 - n) % 2 == 0) ? 1 : -1;
  const int by_parity = p.parity() != wanted ? 1 : 0;
  const int by_value = L_at_nonpositive(p, n).is_zero() ? 1 : 0;
  if (by_parity != by_value) {
    throw Error(ErrorCode::InternalConsistency,
                "parity rule disagrees with the exact L-value for " + p.key() + " at " + std::to_string(n));
  }
  return by_parity;
}

namespace {

// Euler-Maclaurin tail coefficients B_{2j}/(2j)! for one working precision.
class EulerMaclaurin {
 public:
  explicit EulerMaclaurin(long digits)
      : digits_(digits), bits_(digits_to_bits(digits + 10)), terms_(digits + 20) {
    const long corrections = digits + 20;
    const auto bern = bernoulli_numbers(2 * corrections);
    Integer fact = 1;
    for (long j = 1; j <= corrections; ++j) {
      fact *= (2 * j - 1) * (2 * j);
      coeffs_.emplace_back(bern[static_cast<std::size_t>(2 * j)] / Rational(fact), bits_);
    }
  }

  mpfr_prec_t bits() const { return bits_; }

  Real hurwitz(const Real& s_in, const Rational& a) const {
    Real s = s_in;
    mpfr_prec_round(s.get(), bits_, MPFR_RNDN);
    const Real one(1, bits_);
    Real sum(bits_);
    for (long k = 0; k < terms_; ++k) sum += pow(Real(a + Rational(k), bits_), -s);
    const Real x(a + Rational(terms_), bits_);
    sum += pow(x, one - s) / (s - one);
    sum += pow(x, -s) / Real(2, bits_);
    const Real eps = Real::power_of_ten(-(digits_ + 10), bits_);
    Real rising = s;
    Real xpow = pow(x, -s - one);
    const Real inv_x2 = one / (x * x);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const Real term = coeffs_[j] * rising * xpow;
      sum += term;
      if (abs(term) < eps * abs(sum)) break;
      const long m = 2 * static_cast<long>(j + 1);
      rising *= (s + Real(m - 1, bits_)) * (s + Real(m, bits_));
      xpow *= inv_x2;
    }
    return sum;
  }

 private:
  long digits_;
  mpfr_prec_t bits_;
  long terms_;
  std::vector<Real> coeffs_;
};

Complex dirichlet_L_with(const EulerMaclaurin& em, const DirichletCharacter& chi, const Real& s) {
  const DirichletCharacter p = chi.primitive();
  const long f = p.modulus();
  const mpfr_prec_t bits = em.bits();
  Complex sum(bits);
  for (long a = 1; a <= f; ++a) {
    const auto k = p.exponent(a);
    if (!k) continue;
    const Real h = em.hurwitz(s, Rational(a, static_cast<unsigned long>(f)));
    sum += Complex::unit_root(*k, p.order(), bits) * h;
  }
  return sum * pow(Real(f, bits), -s);
}

Complex functional_equation_derivative(const DirichletCharacter& p, long n, long digits) {
  const EulerMaclaurin em(digits);
  const mpfr_prec_t bits = em.bits();
  const long f = p.modulus();
  const long delta = p.parity() == 1 ? 0 : 1;
  const long m = -(n + delta) / 2;
  const Real one(1, bits);
  const Real f_over_pi = Real(f, bits) / Real::pi(bits);

  // Root number W = tau / (i^delta sqrt f).
  Complex w = gauss_sum(p, bits);
  if (delta == 1) w = Complex(w.im, -w.re);
  w *= one / sqrt(Real(f, bits));

  const long s_dual = 1 - n;
  const Real half_arg = Real(Rational(s_dual + delta, 2UL), bits);
  const Complex l_dual = dirichlet_L_with(em, p.conjugate(), Real(s_dual, bits));
  const Real lambda_factor = pow(f_over_pi, half_arg) * gamma(half_arg);

  Integer m_fact;
  mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(m));
  Real scale = lambda_factor * pow(f_over_pi, m) * Real(m_fact, bits) / Real(2, bits);
  if (m % 2 != 0) scale = -scale;
  return w * l_dual * scale;
}

}  // namespace

Real hurwitz_zeta(const Real& s, const Rational& a, long digits) {
  if (a <= 0 || a > 1) throw Error(ErrorCode::InvalidArgument, "hurwitz_zeta needs 0 < a <= 1");
  return EulerMaclaurin(digits).hurwitz(s, a);
}

Complex dirichlet_L(const DirichletCharacter& chi, const Real& s, long digits) {
  return dirichlet_L_with(EulerMaclaurin(digits), chi, s);
}

Complex gauss_sum(const DirichletCharacter& chi, mpfr_prec_t bits) {
  const DirichletCharacter p = chi.primitive();
  const long f = p.modulus();
  const long n = p.order();
  Complex sum(bits);
  for (long a = 1; a <= f; ++a) {
    const auto k = p.exponent(a);
    if (!k) continue;
    // zeta_n^k * zeta_f^a = zeta_{nf}^{k f + a n}
    sum += Complex::unit_root(*k * f + a * n, n * f, bits);
  }
  return sum;
}

LeadingValue leading_value(const DirichletCharacter& chi, long n, long digits) {
  if (n >= 0) throw Error(ErrorCode::InvalidArgument, "leading_value needs n < 0");
  const DirichletCharacter p = chi.primitive();
  LeadingValue out;
  out.order = trivial_zero_order(p, n);
  const mpfr_prec_t bits = digits_to_bits(digits + 30);
  if (out.order == 0) {
    out.exact = L_at_nonpositive(p, n);
    out.value = out.exact->to_complex(bits);
    out.error_bound = Real::power_of_ten(-(digits + 25), bits) * max(out.value.abs(), Real(1, bits));
    return out;
  }
  const Complex coarse = functional_equation_derivative(p, n, digits + 15);
  const Complex fine = functional_equation_derivative(p, n, digits + 30);
  Real err = (fine - coarse).abs() + Real::power_of_ten(-(digits + 20), bits);
  if (Real::power_of_ten(-digits, bits) < err) {
    throw Error(ErrorCode::PrecisionUnderflow, "L'(" + std::to_string(n) + ", " + p.key() +
                                                   ") error estimate " + err.to_string(5) +
                                                   " exceeds 1e-" + std::to_string(digits));
  }
  out.value = fine;
  out.error_bound = std::move(err);
  return out;
}

AbelianFieldSpec::AbelianFieldSpec(long conductor, const std::vector<long>& generators)
    : conductor_(conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidArgument, "field conductor must be >= 1");
  const long f = conductor;
  std::vector<long> units;
  for (long a = 0; a < f; ++a)
    if (is_unit(a, f)) units.push_back(a);

  // Closure of H.
  std::set<long> h{mod(1, f)};
  for (long g : generators) {
    if (!is_unit(g, f)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::to_string(g) + " is not a unit modulo " + std::to_string(f));
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (long x : std::vector<long>(h.begin(), h.end()))
      for (long g : generators)
        if (h.insert(mod(x * g, f)).second) grew = true;
  }
  for (long x : h) subgroup_.push_back(x == 0 ? f : x);
  std::sort(subgroup_.begin(), subgroup_.end());

  // Cosets of H in (Z/f)^x.
  std::map<long, long> coset_of;
  std::vector<long> coset_rep;
  for (long a : units) {
    if (coset_of.count(a)) continue;
    const long id = static_cast<long>(coset_rep.size());
    coset_rep.push_back(a);
    for (long x : h) coset_of[mod(a * x, f)] = id;
  }
  const std::size_t order = coset_rep.size();

  // Greedy generators of G = (Z/f)^x / H.
  std::vector<long> gens;
  std::set<long> reached{coset_of.at(mod(1, f))};
  for (long a : coset_rep) {
    if (reached.count(coset_of.at(a))) continue;
    gens.push_back(a);
    for (bool grew = true; grew;) {
      grew = false;
      for (long c : std::vector<long>(reached.begin(), reached.end()))
        for (long g : gens)
          if (reached.insert(coset_of.at(mod(coset_rep[static_cast<std::size_t>(c)] * g, f))).second) grew = true;
    }
  }

  // Exponent vectors by breadth-first search, with the relation lattice.
  const std::size_t k = gens.size();
  std::vector<std::vector<Integer>> vec(order);
  std::vector<bool> seen(order, false);
  std::vector<std::vector<Integer>> relations;
  const long identity = coset_of.at(mod(1, f));
  vec[static_cast<std::size_t>(identity)] = std::vector<Integer>(k, Integer(0));
  seen[static_cast<std::size_t>(identity)] = true;
  std::deque<long> queue{identity};
  while (!queue.empty()) {
    const long c = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < k; ++j) {
      const long next = coset_of.at(mod(coset_rep[static_cast<std::size_t>(c)] * gens[j], f));
      auto v = vec[static_cast<std::size_t>(c)];
      v[j] += 1;
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        vec[static_cast<std::size_t>(next)] = std::move(v);
        queue.push_back(next);
      } else {
        for (std::size_t i = 0; i < k; ++i) v[i] -= vec[static_cast<std::size_t>(next)][i];
        if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) relations.push_back(std::move(v));
      }
    }
  }

  // G = Z^k / rowspan(R); with R = U S V the coordinates y = x V^{-1} split G
  // as a sum of cyclic groups Z/d_j.
  std::vector<long> cyclic;
  IntMatrix v_inv = IntMatrix::identity(k);
  if (k > 0) {
    const auto snf = smith_normal_form(IntMatrix::from_rows(relations, k));
    v_inv = unimodular_inverse(snf.V);
    for (const auto& d : snf.diagonal()) cyclic.push_back(d.get_si());
    if (cyclic.size() < k || std::any_of(cyclic.begin(), cyclic.end(), [](long d) { return d == 0; })) {
      throw Error(ErrorCode::InternalConsistency, "unit group quotient computed as infinite");
    }
  }
  long exponent = 1;
  for (long d : cyclic) exponent = std::lcm(exponent, d);

  std::vector<std::vector<long>> coords(order, std::vector<long>(k, 0));
  for (std::size_t c = 0; c < order; ++c)
    for (std::size_t j = 0; j < k; ++j) {
      Integer y = 0;
      for (std::size_t i = 0; i < k; ++i) y += vec[c][i] * v_inv(i, j);
      coords[c][j] = mod(y.get_si(), cyclic[j]);
    }

  // Every tuple (t_j in Z/d_j) gives chi(x) = exp(2 pi i sum t_j y_j / d_j).
  std::vector<long> tuple(k, 0);
  for (;;) {
    std::vector<long> table(static_cast<std::size_t>(f), -1);
    for (long a : units) {
      const auto c = static_cast<std::size_t>(coset_of.at(a));
      long e = 0;
      for (std::size_t j = 0; j < k; ++j) e += tuple[j] * coords[c][j] * (exponent / cyclic[j]);
      table[static_cast<std::size_t>(a)] = mod(e, exponent);
    }
    characters_.push_back(DirichletCharacter(f, exponent, std::move(table)).primitive());
    std::size_t j = 0;
    while (j < k && ++tuple[j] == cyclic[j]) tuple[j++] = 0;
    if (j == k) break;
  }
  std::sort(characters_.begin(), characters_.end());

  if (characters_.size() != order) {
    throw Error(ErrorCode::InternalConsistency, "character count differs from the index of H");
  }
  const bool totally_real = std::all_of(characters_.begin(), characters_.end(),
                                        [](const DirichletCharacter& c) { return c.parity() == 1; });
  const long d = degree();
  r1_ = totally_real ? d : 0;
  r2_ = totally_real ? 0 : d / 2;
  const bool minus_one_in_h = h.count(mod(-1, f)) > 0;
  if (minus_one_in_h != totally_real) {
    throw Error(ErrorCode::InternalConsistency, "signature disagrees with whether -1 lies in H");
  }
}

long dedekind_order(const AbelianFieldSpec& field, long n) {
  long order = 0;
  for (const auto& chi : field.characters()) order += trivial_zero_order(chi, n);
  const long expected = (n % 2 != 0) ? field.r2() : field.r1() + field.r2();
  if (order != expected) {
    throw Error(ErrorCode::InternalConsistency,
                "trivial-zero count " + std::to_string(order) + " differs from signature count " +
                    std::to_string(expected));
  }
  return order;
}

SpecialValue dedekind_special_value(const AbelianFieldSpec& field, long n, long digits) {
  SpecialValue out;
  out.order = dedekind_order(field, n);
  const mpfr_prec_t bits = digits_to_bits(digits + 30);
  ComplexBall product(Complex(Real(1, bits)), Real(bits));
  CyclotomicNumber exact(Rational(1));
  for (const auto& chi : field.characters()) {
    auto lv = leading_value(chi, n, digits);
    if (lv.exact) exact *= *lv.exact;
    product = product * ComplexBall(std::move(lv.value), std::move(lv.error_bound));
  }
  if (Real(2, bits) * product.radius + Real::power_of_ten(-(digits + 10), bits) < abs(product.mid.im)) {
    throw Error(ErrorCode::RationalityFailure, "Dedekind leading value has a nonzero imaginary part");
  }
  out.numeric = product.mid.re;
  out.error_bound = product.radius;
  if (out.order == 0) out.exact = exact.rational_value();
  return out;
}

}  // namespace zetaforge
