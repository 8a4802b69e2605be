#include "zetaforge/scheme.hpp"

#include <functional>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

SchemeExpr wrap(auto node) { return std::make_shared<const SchemeNode>(SchemeNode{std::move(node)}); }

void require_prime_power(const Integer& q) {
  if (q < 2 || prime_power_base(q) == 0) {
    throw Error(ErrorCode::NotPrimePower, q.get_str() + " is not a prime power");
  }
}

void require_child(const SchemeExpr& e) {
  if (!e) throw Error(ErrorCode::InvalidArgument, "missing subexpression");
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

using Graded = std::map<long, Integer>;

void merge_into(Graded& acc, const Graded& more, long degree_shift) {
  for (const auto& [i, order] : more) {
    auto [it, fresh] = acc.emplace(i + degree_shift, order);
    if (!fresh) it->second *= order;
  }
}

Rational alternating_product(const Graded& g) {
  Rational chi = 1;
  for (const auto& [i, order] : g) chi *= (i % 2 == 0) ? Rational(order) : Rational(1) / Rational(order);
  chi.canonicalize();
  return chi;
}

// Strata A^{r_j} x X merged degreewise; graded data only if X has it.
WeilOrderData merge_affine_copies(const SchemeExpr& base, const std::vector<long>& ranks, long n) {
  WeilOrderData out;
  out.graded = Graded{};
  for (long r : ranks) {
    WeilOrderData piece = weil_order_data(base, n - r);
    out.chi_mult *= piece.chi_mult;
    if (out.graded && piece.graded) {
      merge_into(*out.graded, *piece.graded, -2 * r);
    } else {
      out.graded.reset();
    }
  }
  return out;
}

std::vector<long> zero_to(long r) {
  std::vector<long> ranks;
  for (long j = 0; j <= r; ++j) ranks.push_back(j);
  return ranks;
}

}  // namespace

SchemeExpr make_point(const Integer& q, long m) {
  require_prime_power(q);
  return wrap(PointNode{q, m});
}

SchemeExpr make_curve(const Integer& q, IntPoly P) {
  require_prime_power(q);
  return wrap(CurveNode{q, trimmed(std::move(P))});
}

SchemeExpr make_number_ring(AbelianFieldSpec field) { return wrap(NumberRingNode{std::move(field)}); }

SchemeExpr make_disjoint(std::vector<SchemeExpr> children) {
  for (const auto& c : children) require_child(c);
  return wrap(DisjointNode{std::move(children)});
}

SchemeExpr make_glue(SchemeExpr closed, SchemeExpr open) {
  require_child(closed);
  require_child(open);
  return wrap(GlueNode{std::move(closed), std::move(open)});
}

SchemeExpr make_minus(SchemeExpr whole, SchemeExpr closed) {
  require_child(whole);
  require_child(closed);
  return wrap(MinusNode{std::move(whole), std::move(closed)});
}

SchemeExpr make_affine(long r, SchemeExpr base) {
  require_child(base);
  return wrap(AffineNode{r, std::move(base)});
}

SchemeExpr make_proj(long r, SchemeExpr base) {
  require_child(base);
  return wrap(ProjNode{r, std::move(base)});
}

SchemeExpr make_cellular(SchemeExpr base, std::vector<long> ranks) {
  require_child(base);
  return wrap(CellularNode{std::move(base), std::move(ranks)});
}

bool same_expr(const SchemeExpr& a, const SchemeExpr& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      Overload{
          [&](const PointNode& x) {
            const auto& y = std::get<PointNode>(b->node);
            return x.q == y.q && x.m == y.m;
          },
          [&](const CurveNode& x) {
            const auto& y = std::get<CurveNode>(b->node);
            return x.q == y.q && x.P == y.P;
          },
          [&](const NumberRingNode& x) { return x.field == std::get<NumberRingNode>(b->node).field; },
          [&](const DisjointNode& x) {
            const auto& y = std::get<DisjointNode>(b->node);
            if (x.children.size() != y.children.size()) return false;
            for (std::size_t i = 0; i < x.children.size(); ++i)
              if (!same_expr(x.children[i], y.children[i])) return false;
            return true;
          },
          [&](const GlueNode& x) {
            const auto& y = std::get<GlueNode>(b->node);
            return same_expr(x.closed, y.closed) && same_expr(x.open, y.open);
          },
          [&](const MinusNode& x) {
            const auto& y = std::get<MinusNode>(b->node);
            return same_expr(x.whole, y.whole) && same_expr(x.closed, y.closed);
          },
          [&](const AffineNode& x) {
            const auto& y = std::get<AffineNode>(b->node);
            return x.r == y.r && same_expr(x.base, y.base);
          },
          [&](const ProjNode& x) {
            const auto& y = std::get<ProjNode>(b->node);
            return x.r == y.r && same_expr(x.base, y.base);
          },
          [&](const CellularNode& x) {
            const auto& y = std::get<CellularNode>(b->node);
            return x.ranks == y.ranks && same_expr(x.base, y.base);
          },
      },
      a->node);
}

ZetaProduct zeta_of(const SchemeExpr& e) {
  return std::visit(
      Overload{
          [](const PointNode& x) {
            IntPoly den(static_cast<std::size_t>(std::max(x.m, 0L)) + 1, Integer(0));
            den.front() = 1;
            den.back() -= 1;
            return ZetaProduct::finite(x.q, RationalFunction({Integer(1)}, std::move(den)));
          },
          [](const CurveNode& x) {
            return ZetaProduct::finite(x.q, RationalFunction(x.P, multiply({Integer(1), Integer(-1)},
                                                                            {Integer(1), Integer(-x.q)})));
          },
          [](const NumberRingNode& x) {
            ZetaProduct z;
            for (const auto& chi : x.field.characters()) z = multiply(z, ZetaProduct::l_factor(chi));
            return z;
          },
          [](const DisjointNode& x) {
            ZetaProduct z;
            for (const auto& c : x.children) z = multiply(z, zeta_of(c));
            return z;
          },
          [](const GlueNode& x) { return multiply(zeta_of(x.closed), zeta_of(x.open)); },
          [](const MinusNode& x) { return multiply(zeta_of(x.whole), inverse(zeta_of(x.closed))); },
          [](const AffineNode& x) { return shift_s(zeta_of(x.base), x.r); },
          [](const ProjNode& x) {
            const ZetaProduct base = zeta_of(x.base);
            ZetaProduct z;
            for (long j : zero_to(x.r)) z = multiply(z, shift_s(base, j));
            return z;
          },
          [](const CellularNode& x) {
            const ZetaProduct base = zeta_of(x.base);
            ZetaProduct z;
            for (long r : x.ranks) z = multiply(z, shift_s(base, r));
            return z;
          },
      },
      e->node);
}

WeilOrderData weil_order_data(const SchemeExpr& e, long n) {
  if (n >= 0) throw Error(ErrorCode::InvalidArgument, "Weil-etale orders are tabulated for n < 0");
  return std::visit(
      Overload{
          [n](const PointNode& x) {
            const Integer order = int_pow(x.q, static_cast<unsigned long>(-n * x.m)) - 1;
            if (order == 0) throw Error(ErrorCode::WeilViolation, "point of degree 0");
            Graded g{{1, order}};
            return WeilOrderData{g, alternating_product(g)};
          },
          [n](const CurveNode& x) {
            const Integer t = int_pow(x.q, static_cast<unsigned long>(-n));
            const Rational p_val = evaluate(x.P, Rational(t));
            if (p_val == 0) {
              throw Error(ErrorCode::WeilViolation, "P vanishes at t = " + t.get_str());
            }
            Graded g{{-1, t * x.q - 1}, {0, abs(p_val.get_num())}, {1, t - 1}};
            return WeilOrderData{g, alternating_product(g)};
          },
          [](const NumberRingNode&) -> WeilOrderData {
            throw Error(ErrorCode::CharZeroAtom, "Weil-etale orders are not available for rings of integers");
          },
          [n](const DisjointNode& x) {
            WeilOrderData out;
            out.graded = Graded{};
            for (const auto& c : x.children) {
              WeilOrderData piece = weil_order_data(c, n);
              out.chi_mult *= piece.chi_mult;
              if (out.graded && piece.graded) {
                merge_into(*out.graded, *piece.graded, 0);
              } else {
                out.graded.reset();
              }
            }
            return out;
          },
          [n](const GlueNode& x) {
            Rational chi = weil_order_data(x.closed, n).chi_mult * weil_order_data(x.open, n).chi_mult;
            return WeilOrderData{std::nullopt, chi};
          },
          [n](const MinusNode& x) {
            Rational chi = weil_order_data(x.whole, n).chi_mult / weil_order_data(x.closed, n).chi_mult;
            return WeilOrderData{std::nullopt, chi};
          },
          [n](const AffineNode& x) { return merge_affine_copies(x.base, {x.r}, n); },
          [n](const ProjNode& x) { return merge_affine_copies(x.base, zero_to(x.r), n); },
          [n](const CellularNode& x) { return merge_affine_copies(x.base, x.ranks, n); },
      },
      e->node);
}

std::vector<Diagnostic> validate(const SchemeExpr& root) {
  std::vector<Diagnostic> out;
  auto error = [&out](const std::string& path, std::string msg) {
    out.push_back({Diagnostic::Severity::Error, path, std::move(msg)});
  };
  auto warn = [&out](const std::string& path, std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, path, std::move(msg)});
  };
  std::function<void(const SchemeExpr&, const std::string&)> walk = [&](const SchemeExpr& e,
                                                                        const std::string& path) {
    auto child = [&](const SchemeExpr& c, std::size_t i) { walk(c, path + "/" + std::to_string(i)); };
    std::visit(Overload{
                   [&](const PointNode& x) {
                     if (x.m < 1) error(path, "point degree " + std::to_string(x.m) + " must be at least 1");
                   },
                   [&](const CurveNode& x) {
                     if (x.P.empty()) {
                       error(path, "L-polynomial is zero");
                     } else if (x.P.front() != 1) {
                       error(path, "constant term of the L-polynomial is " + x.P.front().get_str() +
                                       ", expected 1");
                     }
                   },
                   [&](const NumberRingNode&) {},
                   [&](const DisjointNode& x) {
                     for (std::size_t i = 0; i < x.children.size(); ++i) child(x.children[i], i);
                   },
                   [&](const GlueNode& x) {
                     warn(path, "closed-open decomposition is asserted, not verified");
                     child(x.closed, 0);
                     child(x.open, 1);
                   },
                   [&](const MinusNode& x) {
                     warn(path, "complement plausibility unverified: closed embedding is asserted");
                     child(x.whole, 0);
                     child(x.closed, 1);
                   },
                   [&](const AffineNode& x) {
                     if (x.r < 0) error(path, "affine rank must be nonnegative");
                     child(x.base, 0);
                   },
                   [&](const ProjNode& x) {
                     if (x.r < 0) error(path, "projective rank must be nonnegative");
                     child(x.base, 0);
                   },
                   [&](const CellularNode& x) {
                     if (x.ranks.empty()) error(path, "cellular rank list is empty");
                     for (long r : x.ranks)
                       if (r < 0) error(path, "cellular rank " + std::to_string(r) + " is negative");
                     child(x.base, 0);
                   },
               },
               e->node);
  };
  walk(root, "$");
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Diagnostic::Severity::Error) return true;
  return false;
}

namespace {

void collect(const SchemeExpr& e, std::set<Integer>& qs, bool& char_zero) {
  std::visit(Overload{
                 [&](const PointNode& x) { qs.insert(x.q); },
                 [&](const CurveNode& x) { qs.insert(x.q); },
                 [&](const NumberRingNode&) { char_zero = true; },
                 [&](const DisjointNode& x) {
                   for (const auto& c : x.children) collect(c, qs, char_zero);
                 },
                 [&](const GlueNode& x) {
                   collect(x.closed, qs, char_zero);
                   collect(x.open, qs, char_zero);
                 },
                 [&](const MinusNode& x) {
                   collect(x.whole, qs, char_zero);
                   collect(x.closed, qs, char_zero);
                 },
                 [&](const AffineNode& x) { collect(x.base, qs, char_zero); },
                 [&](const ProjNode& x) { collect(x.base, qs, char_zero); },
                 [&](const CellularNode& x) { collect(x.base, qs, char_zero); },
             },
             e->node);
}

}  // namespace

bool is_finite_characteristic(const SchemeExpr& e) {
  std::set<Integer> qs;
  bool char_zero = false;
  collect(e, qs, char_zero);
  return !char_zero;
}

std::set<Integer> bases(const SchemeExpr& e) {
  std::set<Integer> qs;
  bool char_zero = false;
  collect(e, qs, char_zero);
  return qs;
}

}  // namespace zetaforge
