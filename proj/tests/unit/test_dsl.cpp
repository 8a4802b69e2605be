#include <doctest.h>

#include <random>

#include "../support/corpus.hpp"
#include "zetaforge/dsl.hpp"
#include "zetaforge/error.hpp"

using namespace zetaforge;

namespace {

ErrorCode code_of(std::string_view src) {
  try {
    parse_expr(src);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << src);
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("parsing worked examples") {
  CHECK(same_expr(parse_expr("(proj 1 (point 2))"), make_proj(1, make_point(Integer(2)))));
  CHECK(same_expr(parse_expr("(glue (point 2) (minus (affine 1 (point 2)) (point 2)))"), corpus::nodal_cubic(2)));
  CHECK(same_expr(parse_expr("  ( point\n 9   2 )"), make_point(Integer(9), 2)));
  CHECK(same_expr(parse_expr("(Qi)"), make_number_ring(AbelianFieldSpec::gaussian())));
  CHECK(same_expr(parse_expr("(numberring :conductor 4 :subgroup (1))"), parse_expr("(Qi)")));
  CHECK(same_expr(parse_expr("(numberring :conductor 5 :subgroup (1 4))"),
                  make_number_ring(AbelianFieldSpec(5, {4}))));
  CHECK(same_expr(parse_expr("(disjoint)"), make_disjoint({})));
  CHECK(same_expr(parse_expr("(cellular (point 3) (0 1 1))"), make_cellular(make_point(Integer(3)), {0, 1, 1})));
}

TEST_CASE("canonical printing") {
  CHECK(print_expr(parse_expr("(point 2 1)")) == "(point 2)");
  CHECK(print_expr(parse_expr("(curve   2 (1 0 2))")) == "(curve 2 (1 0 2))");
  CHECK(print_expr(parse_expr("(Q)")) == "(numberring :conductor 1 :subgroup (1))");
  CHECK(print_expr(parse_expr("(numberring :conductor 5 :subgroup (4))")) ==
        "(numberring :conductor 5 :subgroup (1 4))");
}

TEST_CASE("print then parse is the identity on trees") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto e = corpus::random_expression(rng, true);
    const std::string text = print_expr(e);
    CHECK(same_expr(parse_expr(text), e));
    CHECK(print_expr(parse_expr(text)) == text);
  }
}

TEST_CASE("errors carry codes and offsets") {
  CHECK(code_of("(point 6)") == ErrorCode::NotPrimePower);
  CHECK(code_of("(point 2") == ErrorCode::SyntaxError);
  CHECK(code_of("(frob 2)") == ErrorCode::SyntaxError);
  CHECK(code_of("(glue (point 2))") == ErrorCode::ArityError);
  CHECK(code_of("(proj 1 (point 2) (point 2))") == ErrorCode::ArityError);
  CHECK(code_of("(point 2) trailing") == ErrorCode::SyntaxError);
  CHECK(code_of("") == ErrorCode::SyntaxError);
  try {
    parse_expr("(affine x (point 2))");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("offset 8", 0) == 0);
  }
}
