#include "corpus.hpp"

#include <algorithm>

namespace corpus {

using namespace zetaforge;

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntPoly poly(std::initializer_list<long> cs) {
  IntPoly p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

}  // namespace

SchemeExpr nodal_cubic(long q) {
  const auto pt = make_point(Integer(q));
  return make_glue(pt, make_minus(make_affine(1, pt), pt));
}

std::vector<SchemeExpr> finite_atoms() {
  std::vector<SchemeExpr> out;
  const long qs[] = {2, 3, 4, 5};
  for (long q : qs)
    for (long m = 1; m <= 3; ++m) out.push_back(make_point(Integer(q), m));
  out.push_back(make_curve(Integer(2), poly({1, 0, 2})));
  for (long a = -3; a <= 3; ++a) out.push_back(make_curve(Integer(3), poly({1, a, 3})));
  for (long q : qs)
    for (long r = 1; r <= 3; ++r) out.push_back(make_proj(r, make_point(Integer(q))));
  for (long q : qs) out.push_back(nodal_cubic(q));
  for (long r = 1; r <= 3; ++r) {
    for (long q : qs) out.push_back(make_affine(r, make_point(Integer(q))));
    out.push_back(make_affine(r, make_curve(Integer(2), poly({1, 0, 2}))));
    out.push_back(make_affine(r, make_curve(Integer(3), poly({1, 1, 3}))));
    out.push_back(make_affine(r, make_proj(1, make_point(Integer(3), 2))));
  }
  return out;
}

std::vector<SchemeExpr> random_finite_combinations(std::mt19937_64& rng, std::size_t count) {
  const auto atoms = finite_atoms();
  std::vector<SchemeExpr> out;
  while (out.size() < count) {
    const auto& seed = atoms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(atoms.size()) - 1))];
    const Integer q = *bases(seed).begin();
    std::vector<SchemeExpr> same;
    for (const auto& a : atoms)
      if (bases(a) == std::set<Integer>{q}) same.push_back(a);
    auto pick = [&] { return same[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(same.size()) - 1))]; };
    switch (uniform(rng, 0, 2)) {
      case 0:
        out.push_back(make_disjoint({seed, pick()}));
        break;
      case 1:
        out.push_back(make_glue(seed, pick()));
        break;
      default:
        out.push_back(make_disjoint({make_glue(seed, pick()), pick()}));
        break;
    }
  }
  return out;
}

std::vector<FieldCase> field_cases() {
  return {
      {"Q", 1, {}, 1, 0},
      {"Q(i)", 4, {}, 0, 1},
      {"Q(sqrt5)", 5, {4}, 2, 0},
      {"Q(sqrt-3)", 3, {}, 0, 1},
      {"Q(zeta5)", 5, {}, 0, 2},
      {"Q(zeta7)", 7, {}, 0, 3},
  };
}

SchemeExpr random_expression(std::mt19937_64& rng, bool allow_number_rings) {
  static const auto atoms = finite_atoms();
  auto leaf = [&]() -> SchemeExpr {
    if (allow_number_rings && uniform(rng, 0, 3) == 0) {
      const auto fields = field_cases();
      const auto& f = fields[static_cast<std::size_t>(uniform(rng, 0, 3))];
      return make_number_ring(AbelianFieldSpec(f.conductor, f.subgroup));
    }
    return atoms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(atoms.size()) - 1))];
  };
  auto node = [&](SchemeExpr x) -> SchemeExpr {
    switch (uniform(rng, 0, 4)) {
      case 0:
        return make_disjoint({x, leaf()});
      case 1:
        return make_glue(x, leaf());
      case 2:
        return make_affine(uniform(rng, 0, 2), x);
      case 3:
        return make_proj(uniform(rng, 1, 2), x);
      default:
        return make_cellular(x, {0, uniform(rng, 1, 2)});
    }
  };
  SchemeExpr e = leaf();
  const long depth = uniform(rng, 0, 2);
  for (long d = 0; d < depth; ++d) e = node(e);
  return e;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

namespace {

BoundedFreeComplex two_term_piece(std::mt19937_64& rng) {
  const int deg = static_cast<int>(uniform(rng, -3, 2));
  const auto k = static_cast<std::size_t>(uniform(rng, 1, 2));
  IntMatrix a;
  do {
    a = random_matrix(rng, k, k, 6);
  } while (determinant(a) == 0);
  return BoundedFreeComplex({{deg, k}, {deg + 1, k}}, {{deg, a}});
}

// Z -> Z^2 -> Z with u = g (x, y)^T and v = c (-y, x).
BoundedFreeComplex three_term_piece(std::mt19937_64& rng) {
  const int deg = static_cast<int>(uniform(rng, -3, 1));
  long x = 0, y = 0;
  while (x == 0 && y == 0) {
    x = uniform(rng, -3, 3);
    y = uniform(rng, -3, 3);
  }
  const long g = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
  const long c = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
  IntMatrix u{{g * x}, {g * y}};
  IntMatrix v{{-c * y, c * x}};
  return BoundedFreeComplex({{deg, 1}, {deg + 1, 2}, {deg + 2, 1}}, {{deg, u}, {deg + 1, v}});
}

IntMatrix signed_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = uniform(rng, 0, 1) ? 1 : -1;
  return p;
}

}  // namespace

BoundedFreeComplex random_torsion_complex(std::mt19937_64& rng) {
  for (;;) {
    BoundedFreeComplex c;
    const long pieces = uniform(rng, 1, 3);
    for (long i = 0; i < pieces; ++i)
      c = direct_sum(c, uniform(rng, 0, 1) ? two_term_piece(rng) : three_term_piece(rng));
    bool small = true;
    for (const auto& [deg, r] : c.ranks()) small = small && r <= 4;
    if (!small) continue;
    // Scramble bases by signed permutations; entries stay in range.
    std::map<int, IntMatrix> p;
    for (const auto& [deg, r] : c.ranks()) p[deg] = signed_permutation(rng, r);
    std::map<int, IntMatrix> diffs;
    for (const auto& [deg, d] : c.differentials()) diffs[deg] = p.at(deg + 1) * d * p.at(deg).transpose();
    return BoundedFreeComplex(c.ranks(), std::move(diffs));
  }
}

ChainMap random_chain_map(std::mt19937_64& rng) {
  const BoundedFreeComplex a = random_torsion_complex(rng);
  const BoundedFreeComplex b = direct_sum(a, random_torsion_complex(rng));
  std::map<int, IntMatrix> h;  // h^i : A^i -> B^{i-1}
  for (const auto& [deg, r] : a.ranks()) h[deg] = random_matrix(rng, b.rank(deg - 1), r, 2);
  auto h_at = [&](int deg) {
    const auto it = h.find(deg);
    return it != h.end() ? it->second : IntMatrix(b.rank(deg - 1), a.rank(deg));
  };
  std::map<int, IntMatrix> f;
  for (const auto& [deg, r] : a.ranks()) {
    IntMatrix inc(b.rank(deg), r);
    for (std::size_t i = 0; i < r; ++i) inc(i, i) = 1;
    f[deg] = inc + b.differential(deg - 1) * h_at(deg) + h_at(deg + 1) * a.differential(deg);
  }
  return ChainMap{a, b, std::move(f)};
}

}  // namespace corpus
