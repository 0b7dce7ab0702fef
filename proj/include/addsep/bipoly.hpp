#pragma once

#include <map>
#include <optional>

#include "addsep/gf.hpp"
#include "addsep/unipoly.hpp"

namespace addsep {

struct Monomial {
  int x = 0;
  int y = 0;
  int degree() const { return x + y; }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x > y.
inline bool grlex_less(Monomial a, Monomial b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.x < b.x;
}

struct GrlexGreater {
  bool operator()(Monomial a, Monomial b) const { return grlex_less(b, a); }
};

// Sparse bivariate polynomial. Terms are kept in descending graded-lex
// order, so the first term is the leading term; zero coefficients are never
// stored.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Value, GrlexGreater>;

  explicit BiPoly(Field field) : field_(std::move(field)) {}
  BiPoly(Field field, Terms terms);

  static BiPoly constant(const Elem& c);
  static BiPoly monomial(const Elem& c, Monomial m);
  // a(X) and a(Y) viewed as bivariate polynomials.
  static BiPoly in_x(const UniPoly& a);
  static BiPoly in_y(const UniPoly& a);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  Elem coeff(Monomial m) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }
  int deg_x() const;
  int deg_y() const;
  int total_degree() const { return terms_.empty() ? kZeroDegree : terms_.begin()->first.degree(); }
  Monomial leading_monomial() const;
  Elem leading_coeff() const;

  Elem eval(const Elem& x, const Elem& y) const;

  // Adds c * m in place.
  void add_term(Monomial m, Value c);

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  bool operator==(const BiPoly& other) const { return field_ == other.field_ && terms_ == other.terms_; }

 private:
  Field field_;
  Terms terms_;
};

BiPoly scale(const BiPoly& a, const Elem& s);
BiPoly pow(const BiPoly& a, unsigned n);
// Scales so that the graded-lex leading coefficient is 1.
BiPoly monic(const BiPoly& a);
BiPoly swap_variables(const BiPoly& a);
// b(X^2, c Y^2)
BiPoly substitute_squares(const BiPoly& b, const Elem& c);

// Quotient p / q when q divides p exactly, otherwise nullopt. Runs the
// graded-lex division algorithm and stops at the first leading term that
// q cannot cancel.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q);

// Canonical order: total degree, then the graded-lex monomial sequence,
// then the coefficient sequence (lexicographic on elements).
bool canonical_less(const BiPoly& a, const BiPoly& b);

}  // namespace addsep
