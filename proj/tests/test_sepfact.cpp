#include "addsep/error.hpp"
#include "addsep/rng.hpp"
#include "addsep/sepfact.hpp"
#include "addsep/text.hpp"
#include "doctest.h"

using namespace addsep;

namespace {

AdditivePoly A(const Field& f, std::initializer_list<long long> c) {
  std::vector<Value> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return AdditivePoly(f, v);
}

std::vector<std::string> texts(const Factorization& fz) {
  std::vector<std::string> out;
  for (const auto& e : fz.factors) out.push_back(to_string(e.poly));
  return out;
}

AdditivePoly random_additive(const Field& f, unsigned m, Rng& rng) {
  std::vector<Value> c(m + 1);
  for (auto& x : c) x = static_cast<Value>(rng.below(f.order()));
  c[0] = static_cast<Value>(1 + rng.below(f.order() - 1));
  c[m] = static_cast<Value>(1 + rng.below(f.order() - 1));
  return AdditivePoly(f, c);
}

}  // namespace

TEST_CASE("delta_squared") {
  const Field f3 = Field::gf(3);
  CHECK(delta_squared(A(f3, {1, 1}), A(f3, {2, 1})) == Elem::from_int(f3, 2));
  CHECK(delta_squared(A(f3, {2, 1}), A(f3, {2, 1})).is_one());
  const Field f7 = Field::gf(7);
  CHECK(delta_squared(A(f7, {3, 1}), A(f7, {6, 1})) == Elem::from_int(f7, 2));
  CHECK_THROWS_AS(delta_squared(A(f3, {0, 1}), A(f3, {1})), PreconditionError);
  CHECK_THROWS_AS(delta_squared(A(f3, {1}), A(Field::gf(5), {1})), FieldMismatchError);
}

TEST_CASE("matches_scaling") {
  const Field f = Field::gf(3);
  CHECK(matches_scaling(A(f, {1, 1}), A(f, {2, 1}), Elem::from_int(f, 2)));
  CHECK_FALSE(matches_scaling(A(f, {1, 1}), A(f, {1, 2}), Elem::one(f)));
  CHECK(matches_scaling(A(f, {1, 2, 1}), A(f, {1, 2, 1}), Elem::one(f)));
  CHECK_FALSE(matches_scaling(A(f, {1}), A(f, {1, 1}), Elem::one(f)));
  CHECK_THROWS_AS(matches_scaling(A(f, {1}), A(f, {1}), Elem::zero(f)), PreconditionError);
}

TEST_CASE("decide") {
  const Field f3 = Field::gf(3);
  {
    const Verdict v = decide(A(f3, {1, 1}), A(f3, {1, 1}));
    REQUIRE(is_reducible(v));
    const auto& r = std::get<Reducible>(v);
    CHECK(r.c.is_one());
    CHECK(r.kind == ScalingCase::Higher);
    CHECK(std::get<InField>(r.delta).value.is_one());
  }
  CHECK_FALSE(is_reducible(decide(A(f3, {1}), A(f3, {2}))));
  {
    const Verdict v = decide(A(f3, {1, 1}), A(f3, {2, 1}));
    REQUIRE(is_reducible(v));
    const auto& r = std::get<Reducible>(v);
    CHECK(r.c == Elem::from_int(f3, 2));
    CHECK(r.kind == ScalingCase::Higher);
    CHECK(std::get<SqrtOfNonsquare>(r.delta).square == r.c);
  }
  CHECK_FALSE(is_reducible(decide(A(f3, {1, 1}), A(f3, {1, 2}))));
  {
    const Field f9 = Field::gf(3, 2);
    const Verdict v = decide(A(f9, {1}), A(f9, {2}));
    REQUIRE(is_reducible(v));
    const auto& r = std::get<Reducible>(v);
    CHECK(r.kind == ScalingCase::DegreeOne);
    CHECK(std::get<InField>(r.delta).value == Elem::from_coeffs(f9, {0, 1}));
  }
  // deg f != deg g is a plain irreducible verdict.
  CHECK_FALSE(is_reducible(decide(A(f3, {1}), A(f3, {1, 1}))));
}

TEST_CASE("delta in the verdict squares to c") {
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Field f = Field::gf(p, k);
    const auto all = enumerate_squarefree_additive(f, 1);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const Verdict v = decide(a, b);
        if (!is_reducible(v)) continue;
        const auto& r = std::get<Reducible>(v);
        if (const auto* d = std::get_if<InField>(&r.delta)) CHECK(d->value * d->value == r.c);
        if (r.kind == ScalingCase::DegreeOne) CHECK(std::holds_alternative<InField>(r.delta));
      }
    }
  }
}

TEST_CASE("divided_difference") {
  const Field f = Field::gf(3);
  const UniPoly a = UniPoly::from_ints(f, {0, 1, 1});
  CHECK(to_string(divided_difference(a)) == "x+y+1");
  CHECK(to_string(divided_difference(UniPoly::from_ints(f, {0, 1}))) == "1");
  CHECK(to_string(divided_difference(UniPoly::from_ints(f, {0, 1, 0, 0, 0, 1}))) ==
        "x^4+x^3*y+x^2*y^2+x*y^3+y^4+1");
  CHECK_THROWS_AS(divided_difference(UniPoly::from_ints(f, {2})), PreconditionError);

  Rng rng(11);
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 2u}}) {
    const Field g = Field::gf(p, k);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Value> c(2 + rng.below(8));
      for (auto& x : c) x = static_cast<Value>(rng.below(g.order()));
      c.back() = 1;
      const UniPoly u(g, c);
      const BiPoly lhs = (BiPoly::in_x(UniPoly::x(g)) - BiPoly::in_y(UniPoly::x(g))) * divided_difference(u);
      CHECK(lhs == BiPoly::in_x(u) - BiPoly::in_y(u));
    }
  }
}

TEST_CASE("expand_difference") {
  const Field f = Field::gf(3);
  CHECK(to_string(expand_difference(A(f, {1}), A(f, {1}))) == "x^2+2*y^2");
  CHECK(to_string(expand_difference(A(f, {1, 1}), A(f, {2, 1}))) == "x^4+2*y^4+x^2+y^2");
  CHECK(to_string(expand_difference(A(f, {1, 1}), A(f, {1, 1}))) == "x^4+2*y^4+x^2+2*y^2");
}

TEST_CASE("factor_separated goldens") {
  const Field f = Field::gf(3);
  {
    const auto fz = factor_separated(A(f, {1, 1}), A(f, {1, 1}));
    CHECK(texts(fz) == std::vector<std::string>{"x+y", "x+2*y", "x^2+y^2+1"});
    CHECK(fz.field_of_definition == FieldOfDefinition::BaseField);
    CHECK(fz.note.empty());
    CHECK(expand(fz) == expand_difference(A(f, {1, 1}), A(f, {1, 1})));
  }
  {
    const auto fz = factor_separated(A(f, {1, 1}), A(f, {2, 1}));
    CHECK(texts(fz) == std::vector<std::string>{"x^2+y^2", "x^2+2*y^2+1"});
    CHECK(fz.field_of_definition == FieldOfDefinition::BaseField);
    CHECK_FALSE(fz.note.empty());
    CHECK(expand(fz) == expand_difference(A(f, {1, 1}), A(f, {2, 1})));
  }
  {
    const auto fz = factor_separated(A(f, {1}), A(f, {1}));
    CHECK(texts(fz) == std::vector<std::string>{"x+y", "x+2*y"});
  }
  CHECK_THROWS_AS(factor_separated(A(f, {1}), A(f, {2})), PreconditionError);
}

TEST_CASE("factor_separated over the quadratic extension") {
  const Field f = Field::gf(3);
  const auto fz = factor_separated(A(f, {1, 1}), A(f, {2, 1}), {.over_quadratic_extension = true});
  CHECK(fz.field_of_definition == FieldOfDefinition::QuadraticExtension);
  REQUIRE(fz.factors.size() == 3);
  const Field f9 = Field::gf(3, 2);
  CHECK(fz.factors[0].poly.field() == f9);
  for (std::size_t i = 0; i < 2; ++i) CHECK(fz.factors[i].poly.total_degree() == 1);
}

TEST_CASE("unit folding for a nonmonic degree-one pair") {
  const Field f = Field::gf(5);
  // 2X^2 - 3Y^2 with c = 3/2 = 4 = 2^2.
  const auto fz = factor_separated(A(f, {2}), A(f, {3}));
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].poly.leading_coeff() == Elem::from_int(f, 2));
  CHECK(fz.factors[1].poly.leading_coeff().is_one());
  CHECK(expand(fz) == expand_difference(A(f, {2}), A(f, {3})));
}

TEST_CASE("scaling is a group action and preserves degree") {
  Rng rng(5);
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Field f = Field::gf(p, k);
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned m = static_cast<unsigned>(rng.below(3));
      const AdditivePoly a = random_additive(f, m, rng);
      const Elem d1(f, static_cast<Value>(1 + rng.below(f.order() - 1)));
      const Elem d2(f, static_cast<Value>(1 + rng.below(f.order() - 1)));
      // b = d1 a(d1 Y), h = d2 b(d2 Y), built coefficientwise.
      auto scaled = [&](const AdditivePoly& x, const Elem& d) {
        std::vector<Value> c;
        Elem dp = d;  // d^{p^i}
        for (unsigned i = 0; i <= x.m(); ++i) {
          c.push_back((d * x.coeff(i) * dp).value());
          dp = dp.frobenius();
        }
        return AdditivePoly(f, c);
      };
      const AdditivePoly b = scaled(a, d1);
      const AdditivePoly h = scaled(b, d2);
      const Elem c1 = d1 * d1;
      const Elem c2 = d2 * d2;
      REQUIRE(matches_scaling(a, b, c1));
      REQUIRE(matches_scaling(b, h, c2));
      CHECK(matches_scaling(a, h, c1 * c2));
      CHECK(matches_scaling(b, a, c1.inv()));
      const AdditivePoly other = random_additive(f, m + 1, rng);
      CHECK_FALSE(matches_scaling(a, other, c1));
    }
  }
}

TEST_CASE("normalize and with_unit are inverse") {
  const Field f = Field::gf(5);
  const BiPoly x = parse_bipoly(f, "2*x+y");
  const BiPoly y = parse_bipoly(f, "3*x^2+y+1");
  const NormalizedFactors n = normalize({{y, 1}, {x, 2}});
  CHECK(n.unit == Elem::from_int(f, 12));
  REQUIRE(n.factors.size() == 2);
  CHECK(to_string(n.factors[0].poly) == "x+3*y");
  CHECK(n.factors[0].multiplicity == 2);
  const auto back = with_unit(n);
  Factorization a{back, FieldOfDefinition::BaseField, ""};
  CHECK(expand(a) == pow(x, 2) * y);
}

TEST_CASE("decide agrees with a literal search for delta in GF(q^2)") {
  // delta^2 = c lies in K, so delta lies in GF(q^2).
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Field f = Field::gf(p);
    const Embedding& e = canonical_embedding(f, 2);
    const Field& big = e.to();
    const auto all = enumerate_squarefree_additive(f, m);
    for (const auto& a : all) {
      for (const auto& b : all) {
        bool literal = false;
        for (Value v = 1; v < big.order() && !literal; ++v) {
          const Elem delta(big, v);
          const bool in_k = delta.pow(f.order()) == delta;
          if (a.m() == 0 && !in_k) continue;
          if (a.m() != b.m()) continue;
          bool match = true;
          Elem dp = delta;  // delta^{p^i}
          for (unsigned i = 0; i <= a.m() && match; ++i) {
            match = delta * dp * e(a.coeff(i)) == e(b.coeff(i));
            dp = dp.frobenius();
          }
          literal = match;
        }
        CHECK(is_reducible(decide(a, b)) == literal);
      }
    }
  }
}
