#include <doctest.h>

#include <random>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "zetaforge/detcomplex.hpp"
#include "zetaforge/error.hpp"

using namespace zetaforge;

namespace {

BoundedFreeComplex mult(long k, int deg) { return BoundedFreeComplex({{deg, 1}, {deg + 1, 1}}, {{deg, IntMatrix{{k}}}}); }

// m from gcds of minors: |H^{i+1}| = d_r(d^i) when every H is finite.
Rational m_by_minors(const BoundedFreeComplex& c) {
  Rational m = 1;
  for (const auto& [deg, d] : c.differentials()) {
    const Integer D = oracle::determinantal_divisor(d, oracle::minor_rank(d));
    m *= ((deg + 1) % 2 == 0) ? Rational(D) : Rational(Integer(1), D);
  }
  m.canonicalize();
  return m;
}

}  // namespace

TEST_CASE("cohomology of small complexes") {
  const auto two = mult(2, 0);
  CHECK(cohomology(two, 0).is_trivial());
  CHECK(cohomology(two, 1) == FinGenAbGroup(0, {2}));
  const auto one = mult(1, 0);
  for (int i = -1; i <= 2; ++i) CHECK(cohomology(one, i).is_trivial());
  CHECK(cohomology(BoundedFreeComplex(), 0).is_trivial());
}

TEST_CASE("euler characteristics") {
  const auto ec = euler_characteristics(mult(2, 0));
  CHECK(ec.chi == 0);
  CHECK(ec.secondary == 0);
  const BoundedFreeComplex h0({{0, 1}}, {});
  CHECK(euler_characteristics(h0).chi == 1);
  CHECK(euler_characteristics(h0).secondary == 0);
  const BoundedFreeComplex h1({{1, 1}}, {});
  CHECK(euler_characteristics(h1).chi == -1);
  CHECK(euler_characteristics(h1).secondary == -1);
}

TEST_CASE("multiplicative Euler characteristic and determinant") {
  const auto five = mult(5, -1);
  CHECK(cohomology(five, 0) == FinGenAbGroup(0, {5}));
  CHECK(multiplicative_euler_char(five) == 5);
  CHECK(determinant(five) == GradedLine{Rational(1, 5), 0});

  const auto mixed = direct_sum(mult(2, -1), mult(3, 0));
  CHECK(cohomology(mixed, 0) == FinGenAbGroup(0, {2}));
  CHECK(cohomology(mixed, 1) == FinGenAbGroup(0, {3}));
  CHECK(multiplicative_euler_char(mixed) == Rational(2, 3));
  CHECK(determinant(mixed) == GradedLine{Rational(3, 2), 0});

  CHECK(multiplicative_euler_char(mult(1, 0)) == 1);

  const BoundedFreeComplex free({{0, 1}}, {});
  const GradedLine line = determinant(free);
  CHECK_FALSE(line.ideal.has_value());
  CHECK(line.grade == 1);
  try {
    multiplicative_euler_char(free);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteCohomology);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("malformed complexes are rejected") {
  CHECK_THROWS_AS(BoundedFreeComplex({{0, 1}, {1, 1}}, {{0, IntMatrix{{1, 2}}}}), Error);
  // d^1 d^0 != 0
  CHECK_THROWS_AS(BoundedFreeComplex({{0, 1}, {1, 1}, {2, 1}}, {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}}), Error);
}

TEST_CASE("resolutions of Z/k in two placements") {
  for (long k : {2L, 3L, 12L}) {
    CHECK(multiplicative_euler_char(mult(k, -1)) == k);
    CHECK(multiplicative_euler_char(mult(k, 0)) == Rational(1, static_cast<unsigned long>(k)));
  }
}

TEST_CASE("shift") {
  const auto five = mult(5, -1);
  CHECK(multiplicative_euler_char(shift(five, 1)) == Rational(1, 5));
  CHECK(cohomology(shift(five, 1), -1) == FinGenAbGroup(0, {5}));
  CHECK(shift(five, 0) == five);
  CHECK(shift(shift(five, 1), -1) == five);
  const BoundedFreeComplex two_terms({{0, 2}, {1, 1}}, {{0, IntMatrix{{1, 2}}}});
  CHECK(determinant(shift(two_terms, 1)).grade == -determinant(two_terms).grade);
}

TEST_CASE("mapping cones") {
  const auto id = mult(1, 0);
  ChainMap identity{id, id, {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}}};
  const auto cone = mapping_cone(identity);
  CHECK(multiplicative_euler_char(cone) == 1);

  const auto a = mult(5, -1);
  ChainMap to_zero{a, BoundedFreeComplex(), {}};
  CHECK(mapping_cone(to_zero) == shift(a, 1));

  const BoundedFreeComplex z({{0, 1}}, {});
  ChainMap six{z, z, {{0, IntMatrix{{6}}}}};
  const auto c6 = mapping_cone(six);
  CHECK(cohomology(c6, 0) == FinGenAbGroup(0, {6}));
  CHECK(multiplicative_euler_char(c6) == 6);

  ChainMap broken{mult(2, 0), mult(3, 0), {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}}};
  try {
    mapping_cone(broken);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonChainMap);
  }
}

TEST_CASE("random torsion complexes: three routes to m agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = corpus::random_torsion_complex(rng);
    const Rational m = multiplicative_euler_char(c);
    CHECK(m_by_minors(c) == m);
    CHECK(determinant(c) == determinant_termwise(c));
    CHECK(*determinant(c).ideal == 1 / m);
    CHECK(euler_characteristics(c).chi == rank_euler_characteristic(c));
  }
}

TEST_CASE("direct sums and cones are multiplicative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = corpus::random_torsion_complex(rng);
    const auto b = corpus::random_torsion_complex(rng);
    const auto sum = direct_sum(a, b);
    CHECK(multiplicative_euler_char(sum) == multiplicative_euler_char(a) * multiplicative_euler_char(b));
    CHECK(determinant(sum).grade == determinant(a).grade + determinant(b).grade);

    const ChainMap f = corpus::random_chain_map(rng);
    const auto cone = mapping_cone(f);
    CHECK(multiplicative_euler_char(f.target) ==
          multiplicative_euler_char(f.source) * multiplicative_euler_char(cone));
  }
}

TEST_CASE("complex file round trip") {
  const auto j = nlohmann::json::parse(R"({"ranks": {"-1": 1, "0": 1}, "differentials": {"-1": [[5]]}})");
  const auto c = BoundedFreeComplex::from_json(j);
  CHECK(c == mult(5, -1));
  CHECK(BoundedFreeComplex::from_json(c.to_json()) == c);
  CHECK_THROWS_AS(BoundedFreeComplex::from_json(nlohmann::json::parse(R"({"ranks": {"x": 1}})")), Error);
}
