#include "zetaforge/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zetaforge/error.hpp"

namespace zetaforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::InvalidArgument, "IntMatrix: ragged initializer");
    }
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::InvalidArgument, "IntMatrix: row " + std::to_string(i) +
                                                  " has wrong length");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::InvalidArgument, "IntMatrix product: dimension mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i) r.negate_row(i);
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "IntMatrix sum: dimension mismatch");
  }
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n || abs(determinant(a)) != 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
  }
  // Gauss-Jordan over Q on [A | I].
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const Rational pivot = m[c][c];
    for (auto& x : m[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m[i][n + j].get_num();
  return inv;
}

namespace {

// Tracks L * A * R = M together with L^{-1} and R^{-1}.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& a)
      : m_(a),
        left_(IntMatrix::identity(a.rows())),
        left_inv_(IntMatrix::identity(a.rows())),
        right_(IntMatrix::identity(a.cols())),
        right_inv_(IntMatrix::identity(a.cols())) {}

  IntMatrix& m() { return m_; }

  void row_add(std::size_t target, std::size_t source, const Integer& c) {
    m_.add_row_multiple(target, source, c);
    left_.add_row_multiple(target, source, c);
    left_inv_.add_col_multiple(source, target, -c);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& c) {
    m_.add_col_multiple(target, source, c);
    right_.add_col_multiple(target, source, c);
    right_inv_.add_row_multiple(source, target, -c);
  }
  void row_swap(std::size_t a, std::size_t b) {
    m_.swap_rows(a, b);
    left_.swap_rows(a, b);
    left_inv_.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    m_.swap_cols(a, b);
    right_.swap_cols(a, b);
    right_inv_.swap_rows(a, b);
  }
  void row_negate(std::size_t i) {
    m_.negate_row(i);
    left_.negate_row(i);
    left_inv_.negate_col(i);
  }

  SmithDecomposition finish() { return {std::move(left_inv_), std::move(m_), std::move(right_inv_)}; }

 private:
  IntMatrix m_;
  IntMatrix left_;
  IntMatrix left_inv_;
  IntMatrix right_;
  IntMatrix right_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWorkspace ws(a);
  IntMatrix& m = ws.m();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool exhausted = false;
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      ws.row_swap(t, pi);
      ws.col_swap(t, pj);

      bool reduced = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        ws.row_add(i, t, -q);
        if (m(i, t) != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        ws.col_add(j, t, -q);
        if (m(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Enforce d_t | every trailing entry.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      ws.row_add(t, bad_row, 1);
    }
    if (exhausted) break;
    if (m(t, t) < 0) ws.row_negate(t);
  }
  return ws.finish();
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(S.rows(), S.cols());
  std::vector<Integer> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
  return d;
}

FinGenAbGroup::FinGenAbGroup(std::size_t rank, std::vector<Integer> torsion) : rank_(rank) {
  for (auto& t : torsion) {
    if (t == 0) {
      ++rank_;
      continue;
    }
    Integer a = abs(t);
    if (a != 1) torsion_.push_back(std::move(a));
  }
  for (std::size_t i = 1; i < torsion_.size(); ++i) {
    if (!mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t())) {
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
    }
  }
}

std::string FinGenAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ > 0) {
    out << "Z";
    if (rank_ > 1) out << '^' << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return out.str();
}

FinGenAbGroup cokernel(const IntMatrix& a) {
  if (a.cols() == 0) return FinGenAbGroup(a.rows(), {});
  const auto snf = smith_normal_form(a);
  std::vector<Integer> torsion;
  std::size_t rank = a.rows();
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    --rank;
    torsion.push_back(d);
  }
  return FinGenAbGroup(rank, std::move(torsion));
}

Integer group_order(const FinGenAbGroup& g) {
  if (!g.is_finite()) {
    throw Error(ErrorCode::InfiniteGroup,
                "group " + g.to_string() + " has rank " + std::to_string(g.rank()));
  }
  Integer order = 1;
  for (const auto& t : g.torsion()) order *= t;
  return order;
}

namespace {

long integer_valuation(const Integer& x, const Integer& p) {
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

long rational_valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw Error(ErrorCode::ZeroValuation, "valuation of zero is undefined");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "valuation at a non-prime");
  return integer_valuation(x.get_num(), p) - integer_valuation(x.get_den(), p);
}

Integer prime_part(const Integer& x, const Integer& p) {
  if (x == 0) throw Error(ErrorCode::ZeroValuation, "prime part of zero is undefined");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(integer_valuation(x, p)));
  return r;
}

bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer prime_power_base(const Integer& q) {
  if (q < 2) return 0;
  if (is_prime(q)) return q;
  const auto bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  Integer root;
  for (unsigned long k = 2; k <= bits; ++k) {
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && is_prime(root)) return root;
  }
  return 0;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long k = p * p; k <= bound; k += p) composite[static_cast<std::size_t>(k)] = true;
  }
  return primes;
}

}  // namespace zetaforge
