#pragma once

#include <vector>

#include "addsep/gf.hpp"
#include "addsep/unipoly.hpp"

namespace addsep {

// f(X) = sum_i alpha_i X^{p^i}, stored as (alpha_0, ..., alpha_m) with
// alpha_m != 0. Every additive polynomial over a field of characteristic p
// has this shape.
class AdditivePoly {
 public:
  // Trailing zero coefficients are dropped; an all-zero vector is rejected.
  AdditivePoly(Field field, std::vector<Value> coeffs);
  static AdditivePoly from_elems(const std::vector<Elem>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Value>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return Elem(field_, i < c_.size() ? c_[i] : 0); }
  // Number of Frobenius terms beyond the linear one: deg f = p^m.
  unsigned m() const { return static_cast<unsigned>(c_.size() - 1); }
  std::uint64_t degree() const;
  // f'(0) = alpha_0. f is squarefree iff this is nonzero.
  Elem linear_coeff() const { return coeff(0); }
  bool is_squarefree() const { return c_[0] != 0; }

  UniPoly to_unipoly() const;
  Value eval(Value x) const;

  bool operator==(const AdditivePoly& other) const = default;

 private:
  Field field_;
  std::vector<Value> c_;
};

// Reads off the coefficients of a polynomial whose exponents are all powers
// of p. Throws PreconditionError naming the first offending exponent.
AdditivePoly parse_additive(const UniPoly& a);

// F(X) = X f(X).
UniPoly xf_build(const AdditivePoly& f);

// A with A(X^2) = F(X). Throws PreconditionError on an odd exponent.
UniPoly even_part(const UniPoly& F);

// fhat(U) = 2 alpha_0 + sum_{i >= 1} alpha_i U^{(p^i - 1)/2}, so that
// f(X) + X f'(0) = X fhat(X^2). Requires alpha_0 != 0.
UniPoly fhat(const AdditivePoly& f);

struct CriticalValue {
  // Smallest d with the value in GF(p^{k d}).
  unsigned ext_degree = 1;
  // Element of the canonical GF(p^{k d}).
  Elem value;
};

struct CriticalValues {
  std::vector<CriticalValue> values;
  // Roots of fhat whose field of definition has degree above max_ext.
  std::size_t roots_out_of_range = 0;
};

// Nonzero critical values of F = X f(X): the values -beta f'(0) for the
// roots beta of fhat, grouped by the degree of their field of definition
// (ascending) and ordered lexicographically within a degree. max_ext = 0
// means the default m.
CriticalValues critical_values(const AdditivePoly& f, unsigned max_ext = 0);

// A is Morse when A' is squarefree of degree deg A - 1 and A separates the
// roots of A' (checked over the splitting field of A'). Requires
// deg A >= 1 and p not dividing deg A.
bool is_morse(const UniPoly& A);

// Every squarefree additive polynomial over `field` with m <= max_m, in
// enumeration order: by m, then coefficient vectors counted with alpha_0
// as the fastest-moving digit.
std::vector<AdditivePoly> enumerate_squarefree_additive(const Field& field, unsigned max_m);

}  // namespace addsep
