#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "addsep/gf.hpp"

namespace addsep {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Dense univariate polynomial over a finite field. Coefficient i multiplies
// X^i; trailing zeros are never stored.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Value> coeffs);

  static UniPoly constant(const Elem& c);
  static UniPoly monomial(const Elem& c, std::size_t exponent);
  static UniPoly x(const Field& field) { return monomial(Elem::one(field), 1); }
  // Integer coefficients, constant term first, reduced into the prime field.
  static UniPoly from_ints(const Field& field, std::initializer_list<long long> coeffs);

  const Field& field() const { return field_; }
  const std::vector<Value>& coeffs() const { return c_; }
  Value raw(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem coeff(std::size_t i) const { return Elem(field_, raw(i)); }
  Elem leading() const;

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const;

  Value eval(Value x) const;
  Elem operator()(const Elem& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);

  bool operator==(const UniPoly& other) const {
    return field_ == other.field_ && c_ == other.c_;
  }

 private:
  void trim();

  Field field_;
  std::vector<Value> c_;
};

UniPoly scale(const UniPoly& a, const Elem& s);
// a * X^n
UniPoly shift(const UniPoly& a, std::size_t n);
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& a);
// a(b(X))
UniPoly compose(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& a);
// Monic gcd; throws PreconditionError when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& mod);
bool is_squarefree(const UniPoly& a);

// Canonical order: degree, then coefficients from the constant term up,
// each compared lexicographically.
bool canonical_less(const UniPoly& a, const UniPoly& b);

struct UniFactor {
  UniPoly poly;
  int multiplicity = 1;
  bool operator==(const UniFactor&) const = default;
};

// Squarefree decomposition of a nonconstant polynomial into coprime
// squarefree monic parts with their multiplicities.
std::vector<UniFactor> squarefree_decomposition(const UniPoly& a);

// Complete factorization into monic irreducibles (Cantor-Zassenhaus). The
// equal-degree splitting is driven by Rng(seed). Output is in canonical
// order; the product with multiplicities equals monic(a).
std::vector<UniFactor> factor(const UniPoly& a, std::uint64_t seed = 0);

// Distinct roots in the field of a, in lexicographic order.
std::vector<Elem> roots(const UniPoly& a, std::uint64_t seed = 0);

// A field embedding, tabulated on every element of the source field.
class Embedding {
 public:
  Embedding(Field from, Field to, std::vector<Value> table)
      : from_(std::move(from)), to_(std::move(to)), table_(std::move(table)) {}
  const Field& from() const { return from_; }
  const Field& to() const { return to_; }
  Value map(Value v) const { return table_[v]; }
  Elem operator()(const Elem& e) const;

 private:
  Field from_;
  Field to_;
  std::vector<Value> table_;
};

// Embedding of `from` into the canonical GF(p^{k d}) sending t to the
// lexicographically smallest root of from's modulus. Memoized.
const Embedding& canonical_embedding(const Field& from, unsigned d);

UniPoly lift(const UniPoly& a, const Embedding& e);

// Roots of a in GF(p^{k d}) (canonical modulus), lexicographically ordered.
// For d = 1 the roots are returned in a's own field.
std::vector<Elem> roots_in_extension(const UniPoly& a, unsigned d);

}  // namespace addsep
