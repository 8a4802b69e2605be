#include <doctest.h>

#include "zetaforge/archimedean.hpp"
#include "zetaforge/error.hpp"

using namespace zetaforge;

namespace {

SchemeExpr rationals() { return make_number_ring(AbelianFieldSpec::rationals()); }
SchemeExpr gaussian() { return make_number_ring(AbelianFieldSpec::gaussian()); }

long alternating(const std::map<long, long>& dims) {
  long s = 0;
  for (const auto& [i, d] : dims) s += (i % 2 == 0 ? 1 : -1) * d;
  return s;
}

}  // namespace

TEST_CASE("equivariant dimensions") {
  const auto gi = equivariant_dims(gaussian());
  CHECK(gi.for_n(-1).dims == std::map<long, long>{{0, 1}});
  CHECK(gi.for_n(-2).dims == std::map<long, long>{{0, 1}});
  CHECK(equivariant_dims(make_point(Integer(5))).for_n(-3).dims.empty());
  const auto twisted = equivariant_dims(make_affine(1, rationals()));
  CHECK(twisted.for_n(-1).dims == std::map<long, long>{{2, 1}});
  CHECK(twisted.for_n(-2).dims.empty());
  const auto glued = equivariant_dims(make_glue(rationals(), gaussian()));
  CHECK(glued.even.euler_only);
  CHECK(glued.even.euler == 2);
}

TEST_CASE("conjectural vanishing orders") {
  CHECK(vanishing_order_conjectural(rationals(), -2) == 1);
  CHECK(vanishing_order_conjectural(rationals(), -1) == 0);
  for (long n = -1; n >= -4; --n) CHECK(vanishing_order_conjectural(make_point(Integer(3), 2), n) == 0);
  CHECK(vanishing_order_conjectural(make_disjoint({gaussian(), make_point(Integer(2))}), -3) == 1);
}

TEST_CASE("secondary Euler characteristic") {
  CHECK(secondary_euler_vo(rationals(), -2) == 1);
  CHECK(secondary_euler_vo(gaussian(), -1) == 1);
  CHECK(secondary_euler_vo(make_point(Integer(2)), -1) == 0);
  for (long n = -1; n >= -4; --n) {
    const auto e = make_proj(2, rationals());
    CHECK(secondary_euler_vo(e, n) == vanishing_order_conjectural(e, n));
  }
  try {
    secondary_euler_vo(make_glue(rationals(), gaussian()), -1);
    FAIL("expected EulerOnlyData");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EulerOnlyData);
  }
}

TEST_CASE("Hodge data and Gamma factors") {
  const auto e = HodgeData::elliptic_curve();
  CHECK(hodge_equivariant_dims(e, -2) == std::map<long, long>{{0, 1}, {1, 1}, {2, 0}});
  CHECK(hodge_equivariant_dims(e, -1) == std::map<long, long>{{0, 0}, {1, 1}, {2, 1}});
  const auto p1 = HodgeData::projective_line();
  CHECK(hodge_equivariant_dims(p1, -2) == std::map<long, long>{{0, 1}, {1, 0}, {2, 0}});
  CHECK(hodge_equivariant_dims(p1, -1) == std::map<long, long>{{0, 0}, {1, 0}, {2, 1}});
  CHECK(gamma_factor_order(e, -1) == 0);
  CHECK(gamma_factor_order(e, -2) == 0);
  CHECK(gamma_factor_order(p1, -1) == 1);
  for (long n = -1; n >= -6; --n) {
    CHECK(gamma_factor_order(e, n) == alternating(hodge_equivariant_dims(e, n)));
    CHECK(gamma_factor_order(p1, n) == alternating(hodge_equivariant_dims(p1, n)));
  }
  CHECK(HodgeData::from_json(e.to_json()).hpq == e.hpq);
  CHECK_THROWS_AS(HodgeData::from_json(nlohmann::json::parse(R"({"hpq": {"0,1": 1}, "diag": {}})")), Error);
}
