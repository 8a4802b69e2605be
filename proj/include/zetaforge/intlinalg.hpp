#pragma once

// Exact integer linear algebra over Z: dense matrices, Smith normal form,
// finitely generated abelian groups, p-adic valuations of rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace zetaforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or
/// zero columns are allowed and stand for maps to or from the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  /// Rows [first, first + count) as a new matrix.
  IntMatrix row_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Inverse of a square matrix with determinant +-1. Throws InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// A = U * S * V with U, V unimodular and S diagonal, d1 | d2 | ... .
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// Diagonal of S, length min(rows, cols).
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Z^rank + Z/t1 + ... + Z/tk with t1 | t2 | ... | tk, every ti >= 2.
class FinGenAbGroup {
 public:
  FinGenAbGroup() = default;
  /// Factors equal to 1 (or -1) are dropped, signs are normalized; zero
  /// factors count towards the rank. Throws InvalidArgument if the
  /// remaining factors do not form a divisibility chain.
  FinGenAbGroup(std::size_t rank, std::vector<Integer> torsion);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;

  /// "0", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^rows / image(A) for A viewed as a map Z^cols -> Z^rows.
FinGenAbGroup cokernel(const IntMatrix& a);

/// Product of invariant factors; 1 for the trivial group.
/// Throws InfiniteGroup when rank > 0.
Integer group_order(const FinGenAbGroup& g);

/// v_p(x) for nonzero rational x. Throws ZeroValuation for x = 0.
long rational_valuation(const Rational& x, const Integer& p);

/// p^{v_p(x)} for nonzero integer x.
Integer prime_part(const Integer& x, const Integer& p);

bool is_prime(const Integer& n);

/// The prime p with q = p^k (k >= 1), or 0 when q is not a prime power.
Integer prime_power_base(const Integer& q);

/// Primes in [2, bound].
std::vector<long> primes_up_to(long bound);

}  // namespace zetaforge
