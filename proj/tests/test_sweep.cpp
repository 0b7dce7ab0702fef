#include "addsep/error.hpp"
#include "addsep/sweep.hpp"
#include "doctest.h"

using namespace addsep;

TEST_CASE("nth_squarefree_additive follows the enumeration") {
  for (auto [p, k, m] : {std::tuple{3u, 1u, 3u}, {5u, 1u, 2u}, {3u, 2u, 1u}}) {
    const Field f = Field::gf(p, k);
    const auto all = enumerate_squarefree_additive(f, m);
    REQUIRE(all.size() == count_squarefree_additive(f, m));
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(nth_squarefree_additive(f, m, i) == all[i]);
    CHECK_THROWS_AS(nth_squarefree_additive(f, m, all.size()), PreconditionError);
  }
}

TEST_CASE("sweep ceiling and sampling") {
  const Field f9 = Field::gf(3, 2);
  SweepOptions o;
  o.max_m = 1;
  CHECK_THROWS_AS(run_sweep(f9, o), GuardrailError);
  o.sample = 30;
  o.seed = 4;
  const SweepReport a = run_sweep(f9, o);
  CHECK(a.sampled);
  CHECK(a.pairs == 30);
  CHECK(a.ok());
  o.jobs = 3;
  const SweepReport b = run_sweep(f9, o);
  CHECK(b.reducible == a.reducible);
  REQUIRE(b.f_suite.size() == a.f_suite.size());
  for (std::size_t i = 0; i < a.f_suite.size(); ++i) CHECK(a.f_suite[i].f == b.f_suite[i].f);
}

TEST_CASE("per-f suite on known inputs") {
  const Field f = Field::gf(3);
  const auto o = check_f_suite(AdditivePoly(f, {1, 0, 1}));
  CHECK(o.fhat_ok);
  CHECK(o.multiplicity_ok);
  CHECK(o.morse_ok);
}
