#pragma once

// Bounded complexes of free Z-modules and their Knudsen-Mumford
// determinants. Indexing is cohomological throughout: d^i : A^i -> A^{i+1}.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "zetaforge/intlinalg.hpp"

namespace zetaforge {

class BoundedFreeComplex {
 public:
  /// The zero complex.
  BoundedFreeComplex() = default;

  /// Validates that each d^i has shape rank(i+1) x rank(i), that
  /// differentials only connect degrees with nonzero rank, and that
  /// d^{i+1} d^i = 0. Throws MalformedComplex otherwise. Zero ranks and
  /// zero differentials are pruned.
  BoundedFreeComplex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials);

  /// Lowest and highest degree with nonzero rank; lo() > hi() for the zero complex.
  int lo() const;
  int hi() const;
  bool is_zero() const { return ranks_.empty(); }

  std::size_t rank(int degree) const;
  /// d^i, a zero matrix of the right shape when not stored.
  IntMatrix differential(int degree) const;

  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  const std::map<int, IntMatrix>& differentials() const { return differentials_; }

  /// File format: {"ranks": {"-1": 1, "0": 1}, "differentials": {"-1": [[5]]}}.
  static BoundedFreeComplex from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const BoundedFreeComplex&, const BoundedFreeComplex&) = default;

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, IntMatrix> differentials_;
};

/// Determinant line (L, grade). The ideal a*Z is reported by its positive
/// generator a; it is absent when some cohomology group is infinite.
struct GradedLine {
  std::optional<Rational> ideal;
  long grade = 0;

  friend bool operator==(const GradedLine&, const GradedLine&) = default;
};

struct EulerCharacteristics {
  long chi = 0;        ///< sum (-1)^i rk H^i
  long secondary = 0;  ///< sum (-1)^i i rk H^i
};

/// H^i = ker d^i / im d^{i-1}.
FinGenAbGroup cohomology(const BoundedFreeComplex& c, int degree);

EulerCharacteristics euler_characteristics(const BoundedFreeComplex& c);

/// sum (-1)^i rank(A^i), from the terms alone.
long rank_euler_characteristic(const BoundedFreeComplex& c);

/// m = prod |H^i|^{(-1)^i}. Throws InfiniteCohomology naming the first
/// degree whose cohomology has positive rank.
Rational multiplicative_euler_char(const BoundedFreeComplex& c);

/// grade = sum (-1)^i rank(A^i); ideal = 1/m in the all-torsion case.
GradedLine determinant(const BoundedFreeComplex& c);

/// The same line computed term by term: with all cohomology finite,
/// |H^{i+1}| is the product of the nonzero elementary divisors of d^i, so
/// m = prod_i D(d^i)^{(-1)^{i+1}}. Does not form any cohomology group.
GradedLine determinant_termwise(const BoundedFreeComplex& c);

/// Components f^i : A^i -> B^i (rows = rank B^i, cols = rank A^i).
struct ChainMap {
  BoundedFreeComplex source;
  BoundedFreeComplex target;
  std::map<int, IntMatrix> components;

  IntMatrix component(int degree) const;
};

/// Cone(f)^i = B^i + A^{i+1} with d(b, a) = (d_B b + f a, -d_A a).
/// Throws NonChainMap if f d_A != d_B f in some degree, or if a component
/// has the wrong shape.
BoundedFreeComplex mapping_cone(const ChainMap& f);

/// C[k]: degree i holds C^{i+k}, differentials multiplied by (-1)^k.
BoundedFreeComplex shift(const BoundedFreeComplex& c, int k);

BoundedFreeComplex direct_sum(const BoundedFreeComplex& a, const BoundedFreeComplex& b);

}  // namespace zetaforge
