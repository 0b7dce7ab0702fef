#pragma once

#include <string>
#include <variant>
#include <vector>

#include "addsep/additive.hpp"
#include "addsep/bipoly.hpp"

namespace addsep {

// delta with delta^2 = c lies in K.
struct InField {
  Elem value;
};
// c is a nonsquare in K; delta = sqrt(c) lives in the quadratic extension.
struct SqrtOfNonsquare {
  Elem square;
};
using Delta = std::variant<InField, SqrtOfNonsquare>;

enum class ScalingCase { DegreeOne, Higher };

// Irreducible also carries c = g'(0)/f'(0), the only candidate for delta^2.
struct Irreducible {
  Elem c;
};
struct Reducible {
  Elem c;
  Delta delta;
  ScalingCase kind;
};
using Verdict = std::variant<Irreducible, Reducible>;

inline bool is_reducible(const Verdict& v) { return std::holds_alternative<Reducible>(v); }
inline const Elem& verdict_c(const Verdict& v) {
  return std::visit([](const auto& x) -> const Elem& { return x.c; }, v);
}

enum class FieldOfDefinition { BaseField, QuadraticExtension };

struct BiFactor {
  BiPoly poly;
  int multiplicity = 1;
  bool operator==(const BiFactor&) const = default;
};

struct Factorization {
  // Canonically ordered; the overall unit sits on the first factor.
  std::vector<BiFactor> factors;
  FieldOfDefinition field_of_definition = FieldOfDefinition::BaseField;
  // Set when the K-factorization contains X^2 - cY^2 with c a nonsquare.
  std::string note;
};

// c = g'(0) / f'(0). Throws PreconditionError if either linear coefficient
// vanishes.
Elem delta_squared(const AdditivePoly& f, const AdditivePoly& g);

// g(Y) = delta f(delta Y) for some delta with delta^2 = c, tested in K via
// beta_i = alpha_i c^{(p^i + 1)/2}.
bool matches_scaling(const AdditivePoly& f, const AdditivePoly& g, const Elem& c);

// Decides reducibility of X f(X) - Y g(Y) over K.
Verdict decide(const AdditivePoly& f, const AdditivePoly& g);

// B(U, V) = (A(U) - A(V)) / (U - V), with U as x and V as y.
BiPoly divided_difference(const UniPoly& A);

// X f(X) - Y g(Y).
BiPoly expand_difference(const AdditivePoly& f, const AdditivePoly& g);

struct FactorOptions {
  // When c is a nonsquare, split X^2 - cY^2 over GF(q^2) instead of
  // reporting it as one K-irreducible factor.
  bool over_quadratic_extension = false;
};

// Explicit factorization of a reducible X f(X) - Y g(Y). The product of the
// factors is checked against expand_difference before returning. Throws
// PreconditionError on an irreducible pair.
Factorization factor_separated(const AdditivePoly& f, const AdditivePoly& g, FactorOptions options = {});

// Multiplies factors back out (with multiplicities).
BiPoly expand(const Factorization& fz);

// Monic factors in canonical order plus the unit they multiply to.
struct NormalizedFactors {
  Elem unit;
  std::vector<BiFactor> factors;
};
NormalizedFactors normalize(const std::vector<BiFactor>& factors);
// Inverse of normalize: folds the unit into the first factor.
std::vector<BiFactor> with_unit(const NormalizedFactors& n);

}  // namespace addsep
