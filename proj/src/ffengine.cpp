#include "zetaforge/ffengine.hpp"

#include "zetaforge/dsl.hpp"
#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string series_text(const Series& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].get_str();
  }
  return out + "]";
}

std::string graded_text(const std::map<long, Integer>& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, order] : g) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ": " + order.get_str();
  }
  return out + "}";
}

Rational exact_value(const SchemeExpr& e, long n) {
  if (!is_finite_characteristic(e)) {
    throw Error(ErrorCode::CharZeroAtom, "finite-characteristic check applied to a ring of integers");
  }
  SpecialValue v = evaluate_at(zeta_of(e), n);
  return *v.exact;
}

// Power sums of the inverse roots of P from Newton's identities:
// p_k = -sum_{j<k} c_j p_{k-j} - k c_k.
std::vector<Integer> inverse_root_power_sums(const IntPoly& P, long K) {
  if (P.empty() || P.front() != 1) {
    throw Error(ErrorCode::InvalidArgument, "L-polynomial must have constant term 1");
  }
  auto c = [&P](long j) { return j < static_cast<long>(P.size()) ? P[static_cast<std::size_t>(j)] : Integer(0); };
  std::vector<Integer> p(static_cast<std::size_t>(K) + 1, Integer(0));
  for (long k = 1; k <= K; ++k) {
    Integer acc = -Integer(k) * c(k);
    for (long j = 1; j < k; ++j) acc -= c(j) * p[static_cast<std::size_t>(k - j)];
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p;
}

Integer count(const SchemeExpr& e, long k, const Integer& q) {
  return std::visit(
      Overload{
          [k](const PointNode& x) -> Integer { return x.m >= 1 && k % x.m == 0 ? Integer(x.m) : Integer(0); },
          [k](const CurveNode& x) -> Integer {
            const auto p = inverse_root_power_sums(x.P, k);
            return int_pow(x.q, static_cast<unsigned long>(k)) + 1 - p[static_cast<std::size_t>(k)];
          },
          [](const NumberRingNode&) -> Integer {
            throw Error(ErrorCode::CharZeroAtom, "point counts need a finite-characteristic scheme");
          },
          [&](const DisjointNode& x) -> Integer {
            Integer total = 0;
            for (const auto& c : x.children) total += count(c, k, q);
            return total;
          },
          [&](const GlueNode& x) -> Integer { return count(x.closed, k, q) + count(x.open, k, q); },
          [&](const MinusNode& x) -> Integer { return count(x.whole, k, q) - count(x.closed, k, q); },
          [&](const AffineNode& x) -> Integer { return int_pow(q, static_cast<unsigned long>(x.r * k)) * count(x.base, k, q); },
          [&](const ProjNode& x) -> Integer {
            const Integer base = count(x.base, k, q);
            Integer total = 0;
            for (long j = 0; j <= x.r; ++j) total += int_pow(q, static_cast<unsigned long>(j * k)) * base;
            return total;
          },
          [&](const CellularNode& x) -> Integer {
            const Integer base = count(x.base, k, q);
            Integer total = 0;
            for (long r : x.ranks) total += int_pow(q, static_cast<unsigned long>(r * k)) * base;
            return total;
          },
      },
      e->node);
}

Integer single_base(const SchemeExpr& e) {
  if (!is_finite_characteristic(e)) {
    throw Error(ErrorCode::CharZeroAtom, "point counts need a finite-characteristic scheme");
  }
  const auto qs = bases(e);
  if (qs.size() > 1) {
    std::string list;
    for (const auto& q : qs) list += (list.empty() ? "" : ", ") + q.get_str();
    throw Error(ErrorCode::MixedBase, "expression mixes bases " + list);
  }
  return qs.empty() ? Integer(0) : *qs.begin();
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["left"] = left;
  j["right"] = right;
  j["verdict"] = pass ? "pass" : "fail";
  j["context"] = context;
  return j;
}

Integer characteristic(const SchemeExpr& e) {
  if (!is_finite_characteristic(e)) {
    throw Error(ErrorCode::CharZeroAtom, "a ring of integers has no positive characteristic");
  }
  std::set<Integer> ps;
  for (const auto& q : bases(e)) ps.insert(prime_power_base(q));
  if (ps.empty()) throw Error(ErrorCode::InvalidArgument, "expression contains no finite-field atom");
  if (ps.size() > 1) throw Error(ErrorCode::MixedBase, "expression mixes characteristics");
  return *ps.begin();
}

VerificationReport verify_C_finite_char(const SchemeExpr& e, long n) {
  const WeilOrderData w = weil_order_data(e, n);
  const Rational value = exact_value(e, n);
  VerificationReport r;
  r.claim = "C(X,n): |zeta(X,n)| = chi_x";
  r.left = Rational(abs(value)).get_str();
  r.right = w.chi_mult.get_str();
  r.pass = abs(value) == w.chi_mult;
  r.context["expr"] = print_expr(e);
  r.context["n"] = std::to_string(n);
  r.context["zeta"] = value.get_str();
  if (w.graded) r.context["orders"] = graded_text(*w.graded);
  return r;
}

Integer point_count(const SchemeExpr& e, long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "point counts are taken over F_{q^k} with k >= 1");
  return count(e, k, single_base(e));
}

VerificationReport trace_formula_check(const SchemeExpr& e, long K) {
  if (K < 1) throw Error(ErrorCode::InvalidArgument, "series order must be at least 1");
  const Integer q = single_base(e);
  Series log_series(static_cast<std::size_t>(K) + 1, Rational(0));
  std::string counts;
  for (long k = 1; k <= K; ++k) {
    const Integer n_k = count(e, k, q);
    counts += (k > 1 ? ", " : "") + n_k.get_str();
    log_series[static_cast<std::size_t>(k)] = Rational(n_k, Integer(k));
    log_series[static_cast<std::size_t>(k)].canonicalize();
  }
  const Series lhs = power_series(zeta_of(e), K);
  const Series rhs = exp_series(log_series);
  VerificationReport r;
  r.claim = "trace formula: Z(X,t) = exp(sum N_k t^k / k)";
  r.left = series_text(lhs);
  r.right = series_text(rhs);
  r.pass = lhs == rhs;
  r.context["expr"] = print_expr(e);
  r.context["K"] = std::to_string(K);
  r.context["counts"] = "[" + counts + "]";
  return r;
}

VerificationReport ell_adic_check(const SchemeExpr& e, long n, long ell) {
  const Integer p = characteristic(e);
  if (!is_prime(Integer(ell))) throw Error(ErrorCode::InvalidArgument, std::to_string(ell) + " is not prime");
  if (p == ell) {
    throw Error(ErrorCode::InvalidArgument, "l must differ from the characteristic " + p.get_str());
  }
  const WeilOrderData w = weil_order_data(e, n);
  if (!w.graded) {
    throw Error(ErrorCode::GradedDataUnavailable,
                "per-degree orders are not determined below glue or minus nodes");
  }
  const Rational value = exact_value(e, n);
  const Integer l(ell);
  const long v = rational_valuation(value, l);
  Rational left = v <= 0 ? Rational(int_pow(l, static_cast<unsigned long>(-v)))
                         : Rational(Integer(1), int_pow(l, static_cast<unsigned long>(v)));
  Rational right = 1;
  for (const auto& [i, order] : *w.graded) {
    const Integer part = prime_part(order, l);
    right *= (i % 2 != 0) ? Rational(part) : Rational(Integer(1), part);
  }
  left.canonicalize();
  right.canonicalize();
  VerificationReport r;
  r.claim = "l-adic: |zeta(X,n)|_l = prod |H^i|_l^((-1)^(i+1))";
  r.left = left.get_str();
  r.right = right.get_str();
  r.pass = left == right;
  r.context["expr"] = print_expr(e);
  r.context["n"] = std::to_string(n);
  r.context["ell"] = std::to_string(ell);
  r.context["orders"] = graded_text(*w.graded);
  return r;
}

VerificationReport p_part_check(const SchemeExpr& e, long n) {
  const Integer p = characteristic(e);
  const Rational value = exact_value(e, n);
  VerificationReport r;
  r.claim = "p-part: v_p(zeta(X,n)) = 0";
  r.left = std::to_string(rational_valuation(value, p));
  r.right = "0";
  r.pass = r.left == r.right;
  r.context["expr"] = print_expr(e);
  r.context["n"] = std::to_string(n);
  r.context["p"] = p.get_str();
  r.context["zeta"] = value.get_str();
  return r;
}

}  // namespace zetaforge
