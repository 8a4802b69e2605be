#pragma once

// S-expression syntax for scheme expressions.
//
//   (point q [m])                 (curve q (c0 c1 ...))
//   (numberring :conductor f [:subgroup (h ...)])    (Q)    (Qi)
//   (disjoint e ...)   (glue z u)   (minus x z)
//   (affine r e)       (proj r e)   (cellular b (r1 r2 ...))

#include <string_view>

#include "zetaforge/scheme.hpp"

namespace zetaforge {

/// Throws SyntaxError or ArityError (messages carry the byte offset) and
/// NotPrimePower for bad bases.
SchemeExpr parse_expr(std::string_view src);

/// Canonical form: single spaces, (point q) when m = 1, number rings with
/// their full subgroup. parse_expr(print_expr(e)) is structurally e.
std::string print_expr(const SchemeExpr& e);

}  // namespace zetaforge
