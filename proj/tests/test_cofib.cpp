#include <doctest.h>

#include "cctt/parser.hpp"
#include "cctt/printer.hpp"
#include "support.hpp"

using namespace cctt;
using support::to_kernel;

namespace {

Name I = intern("i"), J = intern("j");

}  // namespace

TEST_CASE("endpoint equations") {
  DimExpr i = DimExpr::var(I), j = DimExpr::var(J);
  CHECK(cof_eq(i, true) == Cofib::atom(I, true));
  CHECK(cof_eq(dim_meet(i, j), true) == cof_and(Cofib::atom(I, true), Cofib::atom(J, true)));
  CHECK(cof_eq(dim_meet(i, j), false) == cof_or(Cofib::atom(I, false), Cofib::atom(J, false)));
  CHECK(cof_eq(dim_meet(i, dim_reverse(i)), true).is_bottom());
  CHECK(cof_eq(dim_join(i, dim_reverse(i)), true) == cof_or(Cofib::atom(I, false), Cofib::atom(I, true)));
  CHECK(cof_and(Cofib::atom(I, true), Cofib::atom(I, false)).is_bottom());
}

TEST_CASE("forall drops the quantified name") {
  Cofib p = cof_or(Cofib::atom(I, true), cof_and(Cofib::atom(I, false), Cofib::atom(J, true)));
  CHECK(cof_forall(I, p).is_bottom());
  Cofib q = cof_or(Cofib::atom(J, true), Cofib::atom(I, true));
  CHECK(cof_forall(I, q) == Cofib::atom(J, true));
  CHECK(cof_forall(I, Cofib::top()).is_top());
}

TEST_CASE("random cofibrations agree with partial assignments") {
  oracle::Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    int names = oracle::uniform(rng, 1, 3);
    auto a = oracle::random_cof(rng, names, 2);
    auto b = oracle::random_cof(rng, names, 2);
    Cofib ka = to_kernel(a), kb = to_kernel(b);
    INFO(oracle::cof_text(a, support::dim_names()), " vs ", oracle::cof_text(b, support::dim_names()));
    oracle::each_partial(names, [&](const oracle::Partial& rho) {
      CHECK(support::kernel_holds(ka, rho) == oracle::holds(a, rho));
    });
    bool ent = oracle::entails(names, [&](const auto& r) { return oracle::holds(a, r); },
                               [&](const auto& r) { return oracle::holds(b, r); });
    CHECK(cof_entails(ka, kb) == ent);
  }
}

TEST_CASE("printed cofibrations parse back") {
  oracle::Rng rng(17);
  for (int n = 0; n < 200; ++n) {
    Cofib c = to_kernel(oracle::random_cof(rng, 3, 2));
    CHECK(parse_cofib(print_cofib(c)) == c);
  }
}

TEST_CASE("forall is the largest cofibration without x below p") {
  oracle::Rng rng(19);
  for (int n = 0; n < 300; ++n) {
    int names = oracle::uniform(rng, 1, 3);
    auto p = oracle::random_cof(rng, names, 2);
    int x = oracle::uniform(rng, 0, names - 1);
    Cofib all = cof_forall(support::dim_name(x), to_kernel(p));
    INFO(oracle::cof_text(p, support::dim_names()), " over ", support::dim_names()[x]);
    CHECK_FALSE(all.mentions(support::dim_name(x)));
    oracle::each_partial(names, [&](const oracle::Partial& rho) {
      if (support::kernel_holds(all, rho)) CHECK(oracle::holds(p, rho));
      if (rho[x] == oracle::Pt::Unset) CHECK(support::kernel_holds(all, rho) == oracle::holds(p, rho));
    });
  }
}
