#pragma once

// Dimensions of G_R-equivariant compactly supported cohomology of X(C) with
// R(n) coefficients, the Euler characteristics built from them, and the
// Hodge-theoretic count of Gamma-factor poles.

#include <map>
#include <utility>

#include <json.hpp>

#include "zetaforge/scheme.hpp"

namespace zetaforge {

/// Degree -> dimension for one parity of n. When `euler_only` is set the
/// per-degree dims are unknown and only `euler` is meaningful.
struct ParityDims {
  std::map<long, long> dims;
  bool euler_only = false;
  long euler = 0;

  friend bool operator==(const ParityDims&, const ParityDims&) = default;
};

struct EquivariantBetti {
  ParityDims even;
  ParityDims odd;

  const ParityDims& for_n(long n) const { return n % 2 == 0 ? even : odd; }
};

/// The data depends on n only through its parity; both are computed.
EquivariantBetti equivariant_dims(const SchemeExpr& e);

/// sum (-1)^i dim H^i at parity of n.
long vanishing_order_conjectural(const SchemeExpr& e, long n);

/// sum (-1)^i i rk H^i_{W,c} with rk H^i_{W,c} = dim H^{i-1} + dim H^{i-2}.
/// Throws EulerOnlyData when per-degree dims are unavailable.
long secondary_euler_vo(const SchemeExpr& e, long n);

/// h^{p,q} together with the splitting h^{p,p} = h^{p,+} + h^{p,-}.
struct HodgeData {
  std::map<std::pair<long, long>, long> hpq;
  std::map<long, std::pair<long, long>> diag;

  /// Checks symmetry, nonnegativity and the diagonal splitting (InvalidArgument).
  void check() const;

  /// {"hpq": {"0,0": 1, ...}, "diag": {"0": [1, 0], ...}}
  static HodgeData from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static HodgeData projective_line();
  static HodgeData elliptic_curve();
};

/// dim_i = h^{i/2, (-1)^{n-i/2}} (i even) + sum_{p+q=i, p<q} h^{p,q}.
std::map<long, long> hodge_equivariant_dims(const HodgeData& h, long n);

/// Number of poles at s = n of the archimedean factors, counted with the
/// sign (-1)^i of the cohomological degree.
long gamma_factor_order(const HodgeData& h, long n);

}  // namespace zetaforge
