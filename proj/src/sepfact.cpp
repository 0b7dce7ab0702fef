#include "addsep/sepfact.hpp"

#include <algorithm>
#include <stdexcept>

#include "addsep/text.hpp"

namespace addsep {

namespace {

BiPoly lift_bipoly(const BiPoly& a, const Embedding& e) {
  BiPoly::Terms t;
  for (const auto& [m, c] : a.terms()) t.emplace(m, e.map(c));
  return BiPoly(e.to(), std::move(t));
}

// x - d y
BiPoly linear(const Elem& d, bool plus) {
  BiPoly r = BiPoly::monomial(Elem::one(d.field()), {1, 0});
  r.add_term({0, 1}, plus ? d.value() : (-d).value());
  return r;
}

}  // namespace

Elem delta_squared(const AdditivePoly& f, const AdditivePoly& g) {
  require_same_field(f.field(), g.field());
  if (!f.is_squarefree()) throw PreconditionError("f is not squarefree: f'(0) = 0, but f'(0) g'(0) != 0 is required");
  if (!g.is_squarefree()) throw PreconditionError("g is not squarefree: g'(0) = 0, but f'(0) g'(0) != 0 is required");
  return g.linear_coeff() / f.linear_coeff();
}

bool matches_scaling(const AdditivePoly& f, const AdditivePoly& g, const Elem& c) {
  require_same_field(f.field(), g.field());
  require_same_field(f.field(), c.field());
  if (c.is_zero()) throw PreconditionError("matches_scaling: c must be nonzero");
  if (f.m() != g.m()) return false;
  const auto p = f.field().characteristic();
  // c^{e_i} with e_0 = 1 and e_{i+1} = p e_i - (p-1)/2, i.e. e_i = (p^i + 1)/2.
  const Elem step = c.pow((p - 1) / 2).inv();
  Elem power = c;
  for (unsigned i = 0; i <= f.m(); ++i) {
    if (!(g.coeff(i) == f.coeff(i) * power)) return false;
    power = power.pow(p) * step;
  }
  return true;
}

Verdict decide(const AdditivePoly& f, const AdditivePoly& g) {
  const Elem c = delta_squared(f, g);
  if (!matches_scaling(f, g, c)) return Irreducible{c};
  const bool square = is_square(c);
  if (f.m() >= 1) {
    if (square) return Reducible{c, InField{sqrt(c)}, ScalingCase::Higher};
    return Reducible{c, SqrtOfNonsquare{c}, ScalingCase::Higher};
  }
  if (square) return Reducible{c, InField{sqrt(c)}, ScalingCase::DegreeOne};
  return Irreducible{c};
}

BiPoly divided_difference(const UniPoly& A) {
  if (A.degree() < 1) throw PreconditionError("divided_difference needs a nonconstant polynomial");
  BiPoly b(A.field());
  for (std::size_t j = 1; j < A.coeffs().size(); ++j) {
    const Value a = A.coeffs()[j];
    if (a == 0) continue;
    for (std::size_t k = 0; k < j; ++k) b.add_term({static_cast<int>(k), static_cast<int>(j - 1 - k)}, a);
  }
  return b;
}

BiPoly expand_difference(const AdditivePoly& f, const AdditivePoly& g) {
  require_same_field(f.field(), g.field());
  return BiPoly::in_x(xf_build(f)) - BiPoly::in_y(xf_build(g));
}

NormalizedFactors normalize(const std::vector<BiFactor>& factors) {
  if (factors.empty()) throw PreconditionError("empty factor list");
  const Field& f = factors.front().poly.field();
  NormalizedFactors out{Elem::one(f), {}};
  std::vector<BiFactor> mon;
  for (const auto& e : factors) {
    if (e.poly.is_zero()) throw PreconditionError("zero factor");
    out.unit = out.unit * e.poly.leading_coeff().pow(static_cast<std::uint64_t>(e.multiplicity));
    if (!e.poly.is_constant()) mon.push_back({monic(e.poly), e.multiplicity});
  }
  std::sort(mon.begin(), mon.end(), [](const BiFactor& a, const BiFactor& b) { return canonical_less(a.poly, b.poly); });
  for (auto& e : mon) {
    if (!out.factors.empty() && out.factors.back().poly == e.poly) {
      out.factors.back().multiplicity += e.multiplicity;
    } else {
      out.factors.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<BiFactor> with_unit(const NormalizedFactors& n) {
  std::vector<BiFactor> out = n.factors;
  if (n.unit.is_one()) return out;
  if (!out.empty() && out.front().multiplicity == 1) {
    out.front().poly = scale(out.front().poly, n.unit);
  } else {
    out.insert(out.begin(), BiFactor{BiPoly::constant(n.unit), 1});
  }
  return out;
}

BiPoly expand(const Factorization& fz) {
  if (fz.factors.empty()) throw PreconditionError("empty factorization");
  BiPoly r = BiPoly::constant(Elem::one(fz.factors.front().poly.field()));
  for (const auto& e : fz.factors) r = r * pow(e.poly, static_cast<unsigned>(e.multiplicity));
  return r;
}

Factorization factor_separated(const AdditivePoly& f, const AdditivePoly& g, FactorOptions options) {
  const Verdict v = decide(f, g);
  if (!is_reducible(v)) throw PreconditionError("X f(X) - Y g(Y) is irreducible over K; nothing to factor");
  const auto& r = std::get<Reducible>(v);
  const BiPoly target = expand_difference(f, g);

  Factorization fz;
  std::vector<BiFactor> raw;
  BiPoly expected = target;
  if (r.kind == ScalingCase::DegreeOne) {
    const Elem& gamma = std::get<InField>(r.delta).value;
    raw = {{scale(linear(gamma, false), f.linear_coeff()), 1}, {linear(gamma, true), 1}};
  } else {
    const BiPoly big = substitute_squares(divided_difference(even_part(xf_build(f))), r.c);
    if (const auto* d = std::get_if<InField>(&r.delta)) {
      raw = {{linear(d->value, false), 1}, {linear(d->value, true), 1}, {big, 1}};
    } else if (options.over_quadratic_extension) {
      const Embedding& e = canonical_embedding(f.field(), 2);
      const Elem d = sqrt(e(r.c));
      raw = {{linear(d, false), 1}, {linear(d, true), 1}, {lift_bipoly(big, e), 1}};
      expected = lift_bipoly(target, e);
      fz.field_of_definition = FieldOfDefinition::QuadraticExtension;
    } else {
      BiPoly quad = BiPoly::monomial(Elem::one(f.field()), {2, 0});
      quad.add_term({0, 2}, (-r.c).value());
      raw = {{quad, 1}, {big, 1}};
      fz.note = "x^2-(" + to_string(r.c) + ")*y^2 is irreducible over K since c = " + to_string(r.c) +
                " is a nonsquare; it splits as (x-delta*y)*(x+delta*y) over K(delta), delta^2 = c";
    }
  }
  fz.factors = with_unit(normalize(raw));
  if (!(expand(fz) == expected)) {
    throw std::logic_error("factor_separated: product of factors does not reproduce X f(X) - Y g(Y)");
  }
  return fz;
}

}  // namespace addsep
