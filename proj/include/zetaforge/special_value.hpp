#pragma once

#include <optional>

#include "zetaforge/real.hpp"

namespace zetaforge {

/// Leading Taylor coefficient of a zeta function at s = n together with
/// the vanishing order there. `numeric` is within `error_bound` of the true
/// value; `exact` is present only when the value is a known rational.
struct SpecialValue {
  long order = 0;
  std::optional<Rational> exact;
  Real numeric;
  Real error_bound;

  bool is_exact() const { return exact.has_value(); }
};

}  // namespace zetaforge
