// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "zetaforge/archimedean.hpp"
#include "zetaforge/detcomplex.hpp"
#include "zetaforge/dsl.hpp"
#include "zetaforge/error.hpp"
#include "zetaforge/ffengine.hpp"
#include "zetaforge/lfunctions.hpp"
#include "zetaforge/scheme.hpp"

using namespace zetaforge;

namespace {

// Pinned limits.
constexpr double kRuntimeFiniteField = 5.0;
constexpr double kRuntimeDeterminant = 10.0;
constexpr double kRuntimeLValues = 30.0;
constexpr long kPrecision = 50;
constexpr long kDualPathDigits = 40;
constexpr long kSeriesOrder = 10;
constexpr long kEllBound = 50;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

std::vector<SchemeExpr> finite_corpus() {
  std::mt19937_64 rng(kSeed);
  auto all = corpus::finite_atoms();
  for (const auto& e : corpus::random_finite_combinations(rng, 60)) all.push_back(e);
  return all;
}

Rational absolute(Rational x) { return x < 0 ? Rational(-x) : x; }

Rational exact_zeta(const SchemeExpr& e, long n) { return *evaluate_at(zeta_of(e), n, kPrecision).exact; }

// 1 / (l-part of x) as a rational: |x|_l.
Rational ell_abs(const Rational& x, long ell) {
  const long v = rational_valuation(x, Integer(ell));
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(v < 0 ? -v : v));
  return v <= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational ell_part(const Rational& x, long ell) { return 1 / ell_abs(x, ell); }

std::string expr_name(const SchemeExpr& e) { return print_expr(e); }

// 1. |zeta(X, n)| = chi_x over the finite corpus.
Outcome finite_field_theorem() {
  Outcome o;
  for (const auto& e : finite_corpus())
    for (long n = -1; n >= -3; --n) o.expect(verify_C_finite_char(e, n).pass, expr_name(e));
  return o;
}

// 2. Worked examples, exact.
Outcome worked_examples() {
  Outcome o;
  const auto pt = make_point(Integer(3));
  o.expect(exact_zeta(pt, -2) == Rational(-1, 8), "zeta(F_3, -2)");
  const auto w = weil_order_data(pt, -2);
  o.expect(w.graded && *w.graded == std::map<long, Integer>{{1, 8}}, "order of H^1(F_3)");

  const auto nodal = corpus::nodal_cubic(2);
  o.expect(exact_zeta(nodal, -1) == Rational(-1, 3), "nodal cubic value");
  // Graded orders of the nodal cubic from those of P^1 and the node, H^i(X) ~ H^i(P^1) + H^{i+1}(pt):
  // {-1: 3, 1: 1} and {0: 1} give (3, 1, 1) in degrees -1, 0, 1.
  const auto p1 = weil_order_data(make_proj(1, make_point(Integer(2))), -1);
  const auto node = weil_order_data(make_point(Integer(2)), -1);
  std::map<long, Integer> orders;
  for (long i = -1; i <= 1; ++i) {
    const auto a = p1.graded->find(i);
    const auto b = node.graded->find(i + 1);
    orders[i] = (a == p1.graded->end() ? Integer(1) : a->second) * (b == node.graded->end() ? Integer(1) : b->second);
  }
  o.expect(orders == std::map<long, Integer>{{-1, 3}, {0, 1}, {1, 1}}, "nodal cubic orders (3,1,1)");
  o.expect(Rational(orders[0]) / Rational(orders[-1] * orders[1]) == weil_order_data(nodal, -1).chi_mult,
           "nodal cubic chi_x from (3,1,1)");
  o.expect(exact_zeta(make_proj(1, make_point(Integer(2))), -1) == Rational(1, 3), "zeta(P^1/F_2, -1)");
  return o;
}

// 3. Trace formula at K = 10 plus the enumeration oracle for y^2 + y = x^3.
Outcome trace_formula() {
  Outcome o;
  for (const auto& e : finite_corpus()) {
    o.expect(trace_formula_check(e, kSeriesOrder).pass, expr_name(e));
    std::vector<Integer> counts;
    for (long k = 1; k <= kSeriesOrder; ++k) counts.push_back(oracle::count_points(e, k));
    o.expect(power_series(zeta_of(e), kSeriesOrder) == oracle::zeta_series_from_counts(counts),
             "stratum-count series " + expr_name(e));
  }
  IntPoly p{Integer(1), Integer(0), Integer(2)};
  const auto curve = make_curve(Integer(2), p);
  o.expect(oracle::count_y2_y_x3(1) == 3 && point_count(curve, 1) == 3, "N_1 = 3");
  o.expect(oracle::count_y2_y_x3(2) == 9 && point_count(curve, 2) == 9, "N_2 = 9");
  return o;
}

// 4. l-adic identity for all l <= 50 and p-part triviality. Members below a
// glue or minus node carry only chi_x; there the identity is checked on
// l-parts of chi_x, and the nodal cubic also against its orders (3, 1, 1).
Outcome valuations() {
  Outcome o;
  std::size_t graded = 0, euler = 0;
  for (const auto& e : finite_corpus()) {
    const Integer p = characteristic(e);
    for (long n = -1; n >= -3; --n) {
      o.expect(p_part_check(e, n).pass, "p-part " + expr_name(e));
      const auto w = weil_order_data(e, n);
      const Rational z = exact_zeta(e, n);
      for (long ell : primes_up_to(kEllBound)) {
        if (p == ell) continue;
        if (w.graded) {
          o.expect(ell_adic_check(e, n, ell).pass, "l-adic " + expr_name(e));
          ++graded;
        } else {
          o.expect(ell_abs(z, ell) == 1 / ell_part(w.chi_mult, ell), "l-adic chi_x " + expr_name(e));
          ++euler;
        }
      }
    }
  }
  const Rational z = exact_zeta(corpus::nodal_cubic(2), -1);
  for (long ell : primes_up_to(kEllBound)) {
    if (ell == 2) continue;
    // prod |H^i|_l^{(-1)^{i+1}} with orders 3, 1, 1 in degrees -1, 0, 1.
    o.expect(ell_abs(z, ell) == ell_part(Rational(3), ell), "nodal cubic at l");
  }
  o.detail = std::to_string(graded) + " graded, " + std::to_string(euler) + " via chi_x";
  return o;
}

// 5. Determinant routes, cone multiplicativity, SNF postcondition.
Outcome determinants() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto c = corpus::random_torsion_complex(rng);
    for (const auto& [deg, r] : c.ranks()) o.expect(r <= 4 && deg >= -3 && deg <= 3, "complex shape");
    const auto cohomological = determinant(c);
    const auto termwise = determinant_termwise(c);
    o.expect(cohomological == termwise, "two routes");
    o.expect(cohomological.ideal && *cohomological.ideal == 1 / multiplicative_euler_char(c), "ideal = 1/m");
  }
  for (int i = 0; i < 200; ++i) {
    const ChainMap f = corpus::random_chain_map(rng);
    o.expect(multiplicative_euler_char(f.target) ==
                 multiplicative_euler_char(f.source) * multiplicative_euler_char(mapping_cone(f)),
             "cone multiplicativity");
  }
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 500; ++i) {
    const auto a = corpus::random_matrix(rng, dim(rng), dim(rng), 9);
    const auto snf = smith_normal_form(a);
    bool diag_chain = true;
    const auto d = snf.diagonal();
    for (std::size_t r = 0; r < snf.S.rows(); ++r)
      for (std::size_t c = 0; c < snf.S.cols(); ++c)
        if (r != c && snf.S(r, c) != 0) diag_chain = false;
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
      if (d[k] < 0 || (d[k] == 0 ? d[k + 1] != 0 : d[k + 1] % d[k] != 0)) diag_chain = false;
    const Integer du = determinant(snf.U), dv = determinant(snf.V);
    o.expect(snf.U * snf.S * snf.V == a, "A = USV");
    o.expect((du == 1 || du == -1) && (dv == 1 || dv == -1), "U, V unimodular");
    o.expect(diag_chain, "S diagonal with divisibility");
  }
  return o;
}

// 6. Vanishing orders of Dedekind zeta functions.
Outcome number_ring_orders() {
  Outcome o;
  for (const auto& f : corpus::field_cases()) {
    const AbelianFieldSpec field(f.conductor, f.subgroup);
    o.expect(field.r1() == f.r1 && field.r2() == f.r2, std::string("signature of ") + f.name);
    const auto e = make_number_ring(field);
    for (long n = -1; n >= -4; --n) {
      const long expected = n % 2 == 0 ? f.r1 + f.r2 : f.r2;
      o.expect(dedekind_order(field, n) == expected, std::string("order for ") + f.name);
      o.expect(vanishing_order_conjectural(e, n) == expected, std::string("conjectural order for ") + f.name);
      o.expect(order_at(zeta_of(e), n) == expected, std::string("product order for ") + f.name);
    }
  }
  return o;
}

// 7. Gamma-factor poles against Hodge-theoretic dimensions.
Outcome hodge_gamma() {
  Outcome o;
  for (const auto& h : {HodgeData::projective_line(), HodgeData::elliptic_curve()})
    for (long n = -1; n >= -4; --n) {
      long alt = 0;
      for (const auto& [i, d] : hodge_equivariant_dims(h, n)) alt += (i % 2 == 0 ? 1 : -1) * d;
      o.expect(gamma_factor_order(h, n) == alt, "Gamma order at " + std::to_string(n));
    }
  const auto e = HodgeData::elliptic_curve();
  for (long n = -1; n >= -4; --n) {
    const auto expected = n % 2 == 0 ? std::map<long, long>{{0, 1}, {1, 1}, {2, 0}}
                                     : std::map<long, long>{{0, 0}, {1, 1}, {2, 1}};
    o.expect(hodge_equivariant_dims(e, n) == expected, "elliptic curve table");
  }
  return o;
}

// 8. Exact L-values and dual-path derivatives.
Outcome l_values() {
  Outcome o;
  const auto triv = DirichletCharacter::trivial();
  const DirichletCharacter chi4(4, 2, {-1, 0, -1, 1});
  const auto bern = oracle::bernoulli_recurrence(4);
  const auto chi4_bern = oracle::gen_bernoulli_series({0, 1, 0, -1}, 2);
  // zeta(1 - k) = (-1)^{k+1} B_k / k with B_k from the recurrence (k even, sign-free).
  o.expect(L_at_nonpositive(triv, -1) == CyclotomicNumber(Rational(-1, 12)), "zeta(-1)");
  o.expect(L_at_nonpositive(triv, -1) == CyclotomicNumber(-bern[2] / 2), "zeta(-1) oracle");
  o.expect(L_at_nonpositive(triv, -3) == CyclotomicNumber(Rational(1, 120)), "zeta(-3)");
  o.expect(L_at_nonpositive(triv, -3) == CyclotomicNumber(-bern[4] / 4), "zeta(-3) oracle");
  o.expect(L_at_nonpositive(chi4, 0) == CyclotomicNumber(Rational(1, 2)), "L(0, chi_-4)");
  o.expect(L_at_nonpositive(chi4, 0) == CyclotomicNumber(-chi4_bern[1]), "L(0, chi_-4) oracle");
  o.expect(L_at_nonpositive(chi4, -1).is_zero(), "L(-1, chi_-4)");
  o.expect(chi4_bern[2] == 0, "B_{2,chi_-4} oracle");

  const mpfr_prec_t bits = digits_to_bits(kPrecision + 40);
  const Real tol = Real::power_of_ten(-kDualPathDigits, bits);
  mpfr_t ref;
  mpfr_init2(ref, bits);
  auto agree = [&](const LeadingValue& lv) {
    Real r(bits);
    mpfr_set(r.get(), ref, MPFR_RNDN);
    return lv.order == 1 && abs(lv.value.re - r) < tol && abs(lv.value.im) < tol;
  };
  oracle::riemann_zeta_derivative(ref, -2, bits, 35);
  o.expect(agree(leading_value(triv, -2, kPrecision)), "zeta'(-2) dual path");
  oracle::chi4_L_derivative(ref, -1, bits, 35);
  o.expect(agree(leading_value(chi4, -1, kPrecision)), "L'(-1, chi_-4) dual path");
  mpfr_clear(ref);
  return o;
}

// |a| * |b| against |c| for leading values, exact where possible.
bool product_matches(const SpecialValue& a, const SpecialValue& b, const SpecialValue& c) {
  if (a.exact && b.exact && c.exact) return absolute(*a.exact * *b.exact) == absolute(*c.exact);
  const mpfr_prec_t bits = digits_to_bits(kPrecision);
  const Real prod = abs(a.numeric) * abs(b.numeric);
  const Real bound = a.error_bound * abs(b.numeric) + b.error_bound * abs(a.numeric) + a.error_bound * b.error_bound +
                     c.error_bound + Real::power_of_ten(-kDualPathDigits, bits) * max(prod, Real(1, bits));
  return abs(prod - abs(c.numeric)) <= bound;
}

bool same_value(const SpecialValue& a, const SpecialValue& b) {
  if (a.order != b.order) return false;
  if (a.exact || b.exact) return a.exact == b.exact;
  const mpfr_prec_t bits = digits_to_bits(kPrecision);
  return abs(a.numeric - b.numeric) <= a.error_bound + b.error_bound + Real::power_of_ten(-kDualPathDigits, bits);
}

// 9. Compatibility laws on random expressions.
Outcome compatibility() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> pick_n(-3, -1), pick_r(1, 2);
  for (int i = 0; i < 100; ++i) {
    const auto a = corpus::random_expression(rng, true);
    const auto b = corpus::random_expression(rng, true);
    const long n = pick_n(rng);
    const long r = pick_r(rng);
    const auto za = evaluate_at(zeta_of(a), n, kPrecision);
    const auto zb = evaluate_at(zeta_of(b), n, kPrecision);
    for (const auto& joined : {make_glue(a, b), make_disjoint({a, b})}) {
      const auto zj = evaluate_at(zeta_of(joined), n, kPrecision);
      o.expect(zj.order == za.order + zb.order, "ord additive");
      o.expect(vanishing_order_conjectural(joined, n) ==
                   vanishing_order_conjectural(a, n) + vanishing_order_conjectural(b, n),
               "conjectural ord additive");
      o.expect(product_matches(za, zb, zj), "|zeta*| multiplicative");
    }
    const auto shifted = evaluate_at(zeta_of(make_affine(r, a)), n, kPrecision);
    o.expect(same_value(shifted, evaluate_at(zeta_of(a), n - r, kPrecision)), "affine twist");
    o.expect(vanishing_order_conjectural(make_affine(r, a), n) == vanishing_order_conjectural(a, n - r),
             "affine twist, conjectural");
    std::vector<long> cells;
    for (long j = 0; j <= r; ++j) cells.push_back(j);
    const auto proj = make_proj(r, a);
    const auto cellular = make_cellular(a, cells);
    o.expect(zeta_of(proj) == zeta_of(cellular), "Proj = Cellular");
    o.expect(same_value(evaluate_at(zeta_of(proj), n, kPrecision), evaluate_at(zeta_of(cellular), n, kPrecision)),
             "Proj = Cellular value");
    if (is_finite_characteristic(a))
      o.expect(weil_order_data(proj, n).graded == weil_order_data(cellular, n).graded, "Proj = Cellular orders");
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit;  // seconds; 0 for none
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "finite-field special values |zeta(X,n)| = chi_x", finite_field_theorem, kRuntimeFiniteField},
      {2, "worked examples", worked_examples, 0},
      {3, "trace formula to K = 10", trace_formula, 0},
      {4, "l-adic identity (l <= 50) and p-part triviality", valuations, 0},
      {5, "determinant routes, cone multiplicativity, SNF", determinants, kRuntimeDeterminant},
      {6, "number-ring vanishing orders", number_ring_orders, 0},
      {7, "Hodge dimensions against Gamma-factor poles", hodge_gamma, 0},
      {8, "exact L-values and dual-path derivatives", l_values, kRuntimeLValues},
      {9, "compatibility laws on random expressions", compatibility, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      if (o.first_failure.empty()) o.first_failure = "over time limit";
    }
    all = all && o.pass;
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.checks
         << " checks";
    if (!o.detail.empty()) line << ", " << o.detail;
    line.precision(2);
    line << std::fixed << ", " << secs << " s";
    if (c.time_limit > 0) line << " / " << c.time_limit << " s";
    line << "]";
    if (!o.pass) line << "  first failure: " << o.first_failure;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
