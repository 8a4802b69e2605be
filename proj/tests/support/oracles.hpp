#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library routine they are meant to check.

#include <mpfr.h>

#include <vector>

#include "zetaforge/intlinalg.hpp"
#include "zetaforge/scheme.hpp"

namespace oracle {

using zetaforge::Integer;
using zetaforge::IntMatrix;
using zetaforge::Rational;

/// Determinant by cofactor expansion (small matrices only).
Integer cofactor_det(const std::vector<std::vector<Integer>>& m);

/// gcd of all k x k minors; 0 if all vanish. Enumerates row/column subsets.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k);

/// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const IntMatrix& a);

/// Invariant factors d_k / d_{k-1} for k = 1 .. rank.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a);

/// |Z^rows / A Z^cols| by enumerating residues modulo `bound` (bound must
/// kill the cokernel); 2 x n inputs only.
Integer brute_force_cokernel_order(const IntMatrix& a, long bound);

/// Orders of elements in Z^2 / column span, multiset, by the same enumeration.
std::vector<long> brute_force_cokernel_element_orders(const IntMatrix& a, long bound);

/// B_0 .. B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0 (B_1 = -1/2).
std::vector<Rational> bernoulli_recurrence(long n);

/// B_{k,chi} for k = 0..K from the generating function
/// sum_a chi(a) t e^{a t} / (e^{f t} - 1) with chi given as an integer table
/// (values in {-1, 0, 1}) on 0 .. f-1.
std::vector<Rational> gen_bernoulli_series(const std::vector<long>& chi, long K);

/// Affine solutions of y^2 + y = x^3 over F_2 (k = 1) or F_4 (k = 2), plus the point at infinity.
long count_y2_y_x3(int k);

/// #X(F_{q^k}) by stratum arithmetic. Curves with deg P <= 2 use the power
/// sums of the inverse roots via s_j = -c1 s_{j-1} - c2 s_{j-2}.
Integer count_points(const zetaforge::SchemeExpr& e, long k);

/// exp(sum_{k>=1} N_k t^k / k) to t^K from N_1 .. N_K, via k z_k = sum_j N_j z_{k-j}.
std::vector<Rational> zeta_series_from_counts(const std::vector<Integer>& counts);

/// Riemann zeta near s by MPFR, derivative by central difference.
void riemann_zeta_derivative(mpfr_t out, long s, mpfr_prec_t bits, long h_exponent);

/// L(s, chi_{-4}) = 4^{-s} (zeta(s, 1/4) - zeta(s, 3/4)) with a self-contained
/// Euler-Maclaurin Hurwitz zeta; derivative by central difference.
void chi4_L_derivative(mpfr_t out, long s, mpfr_prec_t bits, long h_exponent);

}  // namespace oracle
