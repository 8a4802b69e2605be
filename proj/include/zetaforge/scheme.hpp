#pragma once

// Expression trees for schemes built from points, curves and rings of
// integers by disjoint union, closed-open gluing, affine and projective
// bundles and cellular constructions, with the rules propagating zeta
// functions and Weil-etale order data through them.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zetaforge/lfunctions.hpp"
#include "zetaforge/polynomial.hpp"
#include "zetaforge/zetarep.hpp"

namespace zetaforge {

struct SchemeNode;
/// Immutable and freely shared.
using SchemeExpr = std::shared_ptr<const SchemeNode>;

/// Spec F_{q^m} over F_q.
struct PointNode {
  Integer q;
  long m = 1;
};
/// Smooth projective curve over F_q with Z = P(t) / ((1 - t)(1 - q t)).
struct CurveNode {
  Integer q;
  IntPoly P;
};
/// Spec O_F.
struct NumberRingNode {
  AbelianFieldSpec field;
};
struct DisjointNode {
  std::vector<SchemeExpr> children;
};
/// X with closed part Z and open complement U.
struct GlueNode {
  SchemeExpr closed;
  SchemeExpr open;
};
/// X \ Z; the closed embedding is the caller's assertion.
struct MinusNode {
  SchemeExpr whole;
  SchemeExpr closed;
};
struct AffineNode {
  long r = 0;
  SchemeExpr base;
};
struct ProjNode {
  long r = 0;
  SchemeExpr base;
};
/// Disjoint strata A^{r_j} x B.
struct CellularNode {
  SchemeExpr base;
  std::vector<long> ranks;
};

struct SchemeNode {
  std::variant<PointNode, CurveNode, NumberRingNode, DisjointNode, GlueNode, MinusNode, AffineNode, ProjNode,
               CellularNode>
      node;
};

/// Factories. Prime-power bases are checked (NotPrimePower); structural
/// conditions that validate() reports as diagnostics are not enforced here.
SchemeExpr make_point(const Integer& q, long m = 1);
SchemeExpr make_curve(const Integer& q, IntPoly P);
SchemeExpr make_number_ring(AbelianFieldSpec field);
SchemeExpr make_disjoint(std::vector<SchemeExpr> children);
SchemeExpr make_glue(SchemeExpr closed, SchemeExpr open);
SchemeExpr make_minus(SchemeExpr whole, SchemeExpr closed);
SchemeExpr make_affine(long r, SchemeExpr base);
SchemeExpr make_proj(long r, SchemeExpr base);
SchemeExpr make_cellular(SchemeExpr base, std::vector<long> ranks);

/// Structural equality of trees.
bool same_expr(const SchemeExpr& a, const SchemeExpr& b);

ZetaProduct zeta_of(const SchemeExpr& e);

/// Orders |H^i(X_et, Z^c(n))| by degree, and their alternating product.
struct WeilOrderData {
  /// Absent below Glue and Minus, where only chi_mult is determined.
  std::optional<std::map<long, Integer>> graded;
  Rational chi_mult = 1;
};

/// n < 0. Throws CharZeroAtom if a number ring occurs.
WeilOrderData weil_order_data(const SchemeExpr& e, long n);

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  /// Position in the tree: "$" for the root, "$/1/0" for the first child of its second child.
  std::string path;
  std::string message;
};

std::vector<Diagnostic> validate(const SchemeExpr& e);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

bool is_finite_characteristic(const SchemeExpr& e);
/// Every q appearing in the tree.
std::set<Integer> bases(const SchemeExpr& e);

}  // namespace zetaforge
