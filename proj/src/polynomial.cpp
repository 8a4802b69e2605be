#include "zetaforge/polynomial.hpp"

#include <sstream>

#include "zetaforge/error.hpp"

namespace zetaforge {

IntPoly trimmed(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(std::move(c));
}

Rational evaluate(const IntPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + Rational(*it);
  acc.canonicalize();
  return acc;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly scale_variable(const IntPoly& p, const Integer& c) {
  IntPoly r = p;
  Integer power = 1;
  for (auto& coeff : r) {
    coeff *= power;
    power *= c;
  }
  return trimmed(std::move(r));
}

IntPoly inflate(const IntPoly& p, long m) {
  if (p.empty()) return {};
  IntPoly r(static_cast<std::size_t>((static_cast<long>(p.size()) - 1) * m + 1), Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i * static_cast<std::size_t>(m)] = p[i];
  return r;
}

std::string to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer mag = abs(p[i]);
    if (first) out << (p[i] < 0 ? "-" : "");
    else out << (p[i] < 0 ? " - " : " + ");
    if (i == 0 || mag != 1) out << mag;
    if (i > 0) out << (mag != 1 ? "*t" : "t");
    if (i > 1) out << '^' << i;
    first = false;
  }
  return out.str();
}

Series divide_series(const IntPoly& p, const IntPoly& q, long order) {
  if (q.empty() || q[0] == 0) throw Error(ErrorCode::InvalidArgument, "series division by q with q(0) = 0");
  Series s(static_cast<std::size_t>(order + 1), Rational(0));
  const Rational q0(q[0]);
  for (long k = 0; k <= order; ++k) {
    Rational acc = static_cast<std::size_t>(k) < p.size() ? Rational(p[static_cast<std::size_t>(k)]) : Rational(0);
    for (long j = 1; j <= k && static_cast<std::size_t>(j) < q.size(); ++j) {
      acc -= Rational(q[static_cast<std::size_t>(j)]) * s[static_cast<std::size_t>(k - j)];
    }
    s[static_cast<std::size_t>(k)] = acc / q0;
  }
  return s;
}

Series multiply_series(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series exp_series(const Series& f) {
  if (f.empty()) return {};
  if (f[0] != 0) throw Error(ErrorCode::InvalidArgument, "exp_series needs f(0) = 0");
  // E' = f' E  =>  k e_k = sum_{j=1}^k j f_j e_{k-j}
  Series e(f.size(), Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k < f.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * f[j] * e[k - j];
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

namespace {

RatPoly to_rat(const IntPoly& p) { return RatPoly(p.begin(), p.end()); }

RatPoly trimmed_rat(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Remainder of a by b over Q; b nonzero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
  a = trimmed_rat(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trimmed_rat(std::move(a));
  }
  return a;
}

// Quotient a / b over Q, assumed exact.
RatPoly quotient(RatPoly a, const RatPoly& b) {
  a = trimmed_rat(std::move(a));
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trimmed_rat(std::move(a));
  }
  return q;
}

// Scale a rational polynomial to a primitive integer polynomial.
IntPoly primitive_integer(const RatPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly r;
  r.reserve(p.size());
  for (const auto& c : p) {
    Rational scaled = c * Rational(lcm_den);
    scaled.canonicalize();
    r.push_back(scaled.get_num());
  }
  const Integer g = content(r);
  if (g > 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly integral(const RatPoly& p) {
  IntPoly r;
  for (const auto& c : p) {
    if (c.get_den() != 1) throw Error(ErrorCode::InternalConsistency, "non-integral polynomial quotient");
    r.push_back(c.get_num());
  }
  return trimmed(std::move(r));
}

}  // namespace

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
  num = trimmed(std::move(num));
  den = trimmed(std::move(den));
  if (num.empty() || den.empty() || num[0] == 0 || den[0] == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "rational function needs nonzero constant terms: (" + zetaforge::to_string(num) + ")/(" +
                    zetaforge::to_string(den) + ")");
  }
  if (num.size() > 1 && den.size() > 1) {
    RatPoly a = to_rat(num), b = to_rat(den);
    while (!b.empty()) {
      RatPoly r = remainder(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.size() > 1) {
      const RatPoly g = to_rat(primitive_integer(a));
      num = integral(quotient(to_rat(num), g));
      den = integral(quotient(to_rat(den), g));
    }
  }
  Integer g;
  const Integer cn = content(num), cd = content(den);
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g > 1) {
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : den) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (den[0] < 0) {
    for (auto& c : num) c = -c;
    for (auto& c : den) c = -c;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::substitute_scaled(const Integer& c) const {
  return {scale_variable(num_, c), scale_variable(den_, c)};
}

Series RationalFunction::power_series(long order) const { return divide_series(num_, den_, order); }

std::string RationalFunction::to_string() const {
  return "(" + zetaforge::to_string(num_) + ")/(" + zetaforge::to_string(den_) + ")";
}

}  // namespace zetaforge
