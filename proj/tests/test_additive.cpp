#include <numeric>
#include <set>

#include "addsep/additive.hpp"
#include "addsep/error.hpp"
#include "addsep/text.hpp"
#include "doctest.h"

using namespace addsep;

namespace {

AdditivePoly A(const Field& f, std::initializer_list<long long> c) {
  std::vector<Value> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return AdditivePoly(f, v);
}

UniPoly U(const Field& f, std::initializer_list<long long> c) { return UniPoly::from_ints(f, c); }

}  // namespace

TEST_CASE("parse_additive") {
  const Field f = Field::gf(3);
  CHECK(parse_additive(U(f, {0, 1, 0, 1})) == A(f, {1, 1}));
  const auto g = parse_additive(U(f, {0, 0, 0, 2, 0, 0, 0, 0, 0, 1}));
  CHECK(g == A(f, {0, 2, 1}));
  CHECK_FALSE(g.is_squarefree());
  try {
    parse_additive(U(f, {0, 1, 1}));
    FAIL("accepted x^2 + x");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("exponent 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_additive(U(f, {1, 1})), PreconditionError);
  CHECK_THROWS_AS(parse_additive(UniPoly(f)), PreconditionError);
}

TEST_CASE("xf_build and even_part") {
  const Field f = Field::gf(3);
  CHECK(xf_build(A(f, {1, 1})) == U(f, {0, 0, 1, 0, 1}));
  CHECK(xf_build(A(f, {1})) == U(f, {0, 0, 1}));
  CHECK(xf_build(A(f, {1, 0, 1})) == U(f, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));

  CHECK(even_part(U(f, {0, 0, 1, 0, 1})) == U(f, {0, 1, 1}));
  CHECK(even_part(U(f, {0, 0, 1})) == U(f, {0, 1}));
  CHECK(even_part(U(f, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1})) == U(f, {0, 1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(even_part(U(f, {0, 1, 1})), PreconditionError);
}

TEST_CASE("fhat") {
  const Field f = Field::gf(3);
  CHECK(fhat(A(f, {1, 1})) == U(f, {2, 1}));
  CHECK(fhat(A(f, {1})) == U(f, {2}));
  CHECK(fhat(A(f, {1, 0, 1})) == U(f, {2, 0, 0, 0, 1}));
  CHECK_THROWS_AS(fhat(A(f, {0, 1})), PreconditionError);
}

TEST_CASE("fhat identity f(X) + X f'(0) = X fhat(X^2) over every small field") {
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Field f = Field::gf(p, k);
    for (const auto& a : enumerate_squarefree_additive(f, p == 3 ? 2 : 1)) {
      const UniPoly fh = fhat(a);
      const UniPoly lhs = a.to_unipoly() + shift(UniPoly::constant(a.linear_coeff()), 1);
      CHECK(lhs == shift(compose(fh, U(f, {0, 0, 1})), 1));
      CHECK(static_cast<std::uint64_t>(fh.degree()) == (a.degree() - 1) / 2);
      CHECK(fh.coeff(0) == a.linear_coeff() + a.linear_coeff());
      CHECK(is_squarefree(fh));
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_squarefree_additive(Field::gf(3), 2).size() == 18);
  CHECK(enumerate_squarefree_additive(Field::gf(5), 1).size() == 20);
  CHECK(enumerate_squarefree_additive(Field::gf(3, 2), 1).size() == 8 + 64);
  std::set<std::vector<Value>> seen;
  for (const auto& a : enumerate_squarefree_additive(Field::gf(3), 2)) {
    CHECK(a.is_squarefree());
    CHECK(seen.insert(a.coeffs()).second);
  }
}

TEST_CASE("additivity is exhaustive over q <= 25") {
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {5u, 2u}, {7u, 1u}}) {
    const Field f = Field::gf(p, k);
    for (const auto& a : enumerate_squarefree_additive(f, 1)) {
      const UniPoly u = a.to_unipoly();
      for (Value x = 0; x < f.order(); ++x) {
        CHECK(u.eval(x) == a.eval(x));
        for (Value y = 0; y < f.order(); ++y) {
          if (u.eval(f.add(x, y)) != f.add(u.eval(x), u.eval(y))) {
            FAIL_CHECK(f.name() << " f = " << to_string(u) << " fails at (" << x << ", " << y << ")");
          }
        }
      }
    }
  }
}

TEST_CASE("critical_values") {
  const Field f = Field::gf(3);
  const auto one = critical_values(A(f, {1, 1}), 1);
  REQUIRE(one.values.size() == 1);
  CHECK(one.values[0].ext_degree == 1);
  CHECK(one.values[0].value == Elem::from_int(f, 2));
  CHECK(xf_build(A(f, {1, 1})).eval(1) == 2);

  CHECK(critical_values(A(f, {1}), 3).values.empty());

  const auto four = critical_values(A(f, {1, 0, 1}), 2);
  const Field f9 = Field::gf(3, 2);
  REQUIRE(four.values.size() == 4);
  CHECK(four.values[0].ext_degree == 1);
  CHECK(four.values[0].value == Elem::from_int(f, 1));
  CHECK(four.values[1].value == Elem::from_int(f, 2));
  CHECK(four.values[2].ext_degree == 2);
  CHECK(four.values[2].value == Elem::from_coeffs(f9, {0, 1}));
  CHECK(four.values[3].value == Elem::from_coeffs(f9, {0, 2}));
  CHECK(four.roots_out_of_range == 0);

  const auto clipped = critical_values(A(f, {1, 0, 1}), 1);
  CHECK(clipped.values.size() == 2);
  CHECK(clipped.roots_out_of_range == 2);
}

TEST_CASE("critical values are values of F at roots of F'") {
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}}) {
    const Field f = Field::gf(p, k);
    for (const auto& a : enumerate_squarefree_additive(f, p == 3 && k == 1 ? 2 : 1)) {
      const UniPoly F = xf_build(a);
      const UniPoly dF = derivative(F);
      const auto cv = critical_values(a, 4);
      REQUIRE(cv.roots_out_of_range == 0);
      std::multiset<Value> expected;
      unsigned split = 1;
      for (const auto& e : factor(dF)) split = std::lcm(split, static_cast<unsigned>(e.poly.degree()));
      const UniPoly Fl = lift(F, canonical_embedding(f, split));
      for (const auto& r : roots_in_extension(dF, split)) {
        if (const Value v = Fl.eval(r.value()); v != 0) expected.insert(v);
      }
      // Each nonzero critical value is taken at the two critical points +-alpha.
      // Embeddings may differ by a Galois conjugation; the value set is stable.
      std::multiset<Value> doubled;
      for (const auto& c : cv.values) {
        const Elem v = c.ext_degree == split ? c.value : canonical_embedding(c.value.field(), split / c.ext_degree)(c.value);
        doubled.insert(v.value());
        doubled.insert(v.value());
      }
      CHECK(doubled == expected);
    }
  }
}

TEST_CASE("multiplicity pattern of F - gamma") {
  const Field f = Field::gf(3);
  const UniPoly F = xf_build(A(f, {1, 1}));
  const UniPoly g = gcd(F - U(f, {2}), derivative(F));
  CHECK(g == U(f, {2, 0, 1}));
  CHECK(gcd(F, derivative(F)).degree() == 1);
}

TEST_CASE("is_morse") {
  const Field f = Field::gf(3);
  CHECK(is_morse(U(f, {0, 1, 1})));
  CHECK(is_morse(U(f, {0, 1, 0, 0, 0, 1})));
  CHECK(is_morse(U(f, {0, 1})));
  // U^4 + U: A' = U^3 + 1 = (U + 1)^3 is not squarefree.
  CHECK_FALSE(is_morse(U(f, {0, 1, 0, 0, 1})));
  CHECK_THROWS_AS(is_morse(U(Field::gf(5), {0, 0, 1, 0, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(is_morse(U(f, {1})), PreconditionError);
  // U^4 + 2U^2 over GF(5): A' = 4U^3 + 4U has roots 0, 2, 3 and A(2) = A(3).
  CHECK_FALSE(is_morse(U(Field::gf(5), {0, 0, 2, 0, 1})));
}

TEST_CASE("guardrail on additive degree") {
  const Field f = Field::gf(3);
  CHECK_THROWS_AS(AdditivePoly(f, std::vector<Value>(14, 1)), GuardrailError);
  CHECK_NOTHROW(AdditivePoly(f, std::vector<Value>(13, 1)));
}
