#pragma once

// Deterministic test corpora: scheme expressions and random complexes.

#include <random>
#include <vector>

#include "zetaforge/detcomplex.hpp"
#include "zetaforge/scheme.hpp"

namespace corpus {

using zetaforge::BoundedFreeComplex;
using zetaforge::ChainMap;
using zetaforge::IntMatrix;
using zetaforge::SchemeExpr;

/// Glue(pt, Minus(A^1, pt)) over F_q.
SchemeExpr nodal_cubic(long q);

/// Points, curves, projective spaces, nodal cubics and affine twists over
/// q in {2, 3, 4, 5}; every member has a single base.
std::vector<SchemeExpr> finite_atoms();

/// Random disjoint unions and glues of finite_atoms() over a common base.
std::vector<SchemeExpr> random_finite_combinations(std::mt19937_64& rng, std::size_t count);

/// Q, Q(i), Q(sqrt 5), Q(sqrt -3), Q(zeta_5), Q(zeta_7) with their expected (r1, r2).
struct FieldCase {
  const char* name;
  long conductor;
  std::vector<long> subgroup;
  long r1;
  long r2;
};
std::vector<FieldCase> field_cases();

/// Random trees of depth <= 2 over finite atoms and small number rings.
SchemeExpr random_expression(std::mt19937_64& rng, bool allow_number_rings);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound);

/// All cohomology finite; ranks <= 4 in degrees within [-3, 3]; differential
/// entries in [-6, 6].
BoundedFreeComplex random_torsion_complex(std::mt19937_64& rng);

/// B = A + C for a random torsion C, f = inclusion + d_B h + h d_A for a
/// random h of degree -1.
ChainMap random_chain_map(std::mt19937_64& rng);

}  // namespace corpus
