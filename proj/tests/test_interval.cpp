#include <doctest.h>

#include "cctt/parser.hpp"
#include "cctt/printer.hpp"
#include "support.hpp"

using namespace cctt;
using support::to_kernel;

TEST_CASE("connections are not collapsed") {
  DimExpr i = DimExpr::var(intern("i"));
  DimExpr contra = dim_meet(i, dim_reverse(i));
  CHECK_FALSE(contra.is_zero());
  CHECK(dim_join(i, dim_reverse(i)) != DimExpr::one());
  CHECK(dim_reverse(dim_reverse(contra)) == contra);
}

TEST_CASE("absorption and constants") {
  DimExpr i = DimExpr::var(intern("i")), j = DimExpr::var(intern("j"));
  CHECK(dim_join(i, dim_meet(i, j)) == i);
  CHECK(dim_meet(i, dim_join(i, j)) == i);
  CHECK(dim_meet(i, DimExpr::zero()).is_zero());
  CHECK(dim_join(i, DimExpr::one()).is_one());
  CHECK(dim_reverse(DimExpr::zero()).is_one());
  CHECK(dim_meet(i, j) == dim_meet(j, i));
}

TEST_CASE("substitution is a homomorphism") {
  Name x = intern("i");
  DimExpr j = DimExpr::var(intern("j"));
  DimExpr e = dim_join(DimExpr::var(x), dim_meet(dim_reverse(DimExpr::var(x)), j));
  CHECK(dim_subst(e, x, DimExpr::one()).is_one());
  CHECK(dim_subst(e, x, DimExpr::zero()) == j);
  CHECK(dim_subst(e, x, dim_reverse(j)) == dim_join(dim_reverse(j), j));
}

TEST_CASE("random pairs agree with the four-element algebra") {
  oracle::Rng rng(7);
  int equal = 0;
  for (int n = 0; n < 400; ++n) {
    int names = oracle::uniform(rng, 1, 4);
    auto a = oracle::random_dim(rng, names, 3);
    auto b = n % 2 ? oracle::rewrite(rng, a, names) : oracle::random_dim(rng, names, 3);
    bool expected = oracle::dm4_equal(a, b, names);
    equal += expected;
    INFO(oracle::dim_text(a, support::dim_names()), " vs ", oracle::dim_text(b, support::dim_names()));
    CHECK(dim_equal(to_kernel(a), to_kernel(b)) == expected);
    CHECK(normalize(to_kernel(a)) == to_kernel(a));
  }
  CHECK(equal > 100);
}

TEST_CASE("printed dimensions parse back") {
  oracle::Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    DimExpr e = to_kernel(oracle::random_dim(rng, 4, 3));
    CHECK(parse_dim(print_dim(e)) == e);
  }
}
