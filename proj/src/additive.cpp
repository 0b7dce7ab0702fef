#include "addsep/additive.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace addsep {

namespace {

constexpr std::uint64_t kMaxAdditiveDegree = 1u << 20;

bool is_power_of(std::uint64_t n, std::uint64_t p, unsigned& exponent) {
  exponent = 0;
  while (n % p == 0) {
    n /= p;
    ++exponent;
  }
  return n == 1;
}

}  // namespace

AdditivePoly::AdditivePoly(Field field, std::vector<Value> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) throw PreconditionError("the zero polynomial is not a valid additive polynomial here");
  for (auto v : c_) {
    if (v >= field_.order()) throw std::out_of_range("raw value outside the field");
  }
  std::uint64_t d = 1;
  for (unsigned i = 0; i + 1 < c_.size(); ++i) {
    d *= field_.characteristic();
    if (d > kMaxAdditiveDegree) throw GuardrailError("additive polynomial degree exceeds 2^20");
  }
}

AdditivePoly AdditivePoly::from_elems(const std::vector<Elem>& coeffs) {
  if (coeffs.empty()) throw PreconditionError("empty coefficient vector");
  const Field f = coeffs.front().field();
  std::vector<Value> v;
  for (const auto& e : coeffs) {
    require_same_field(f, e.field());
    v.push_back(e.value());
  }
  return AdditivePoly(f, std::move(v));
}

std::uint64_t AdditivePoly::degree() const {
  std::uint64_t d = 1;
  for (unsigned i = 0; i < m(); ++i) d *= field_.characteristic();
  return d;
}

UniPoly AdditivePoly::to_unipoly() const {
  std::vector<Value> v(degree() + 1, 0);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < c_.size(); ++i, e *= field_.characteristic()) v[e] = c_[i];
  return UniPoly(field_, std::move(v));
}

Value AdditivePoly::eval(Value x) const {
  Value acc = 0;
  Value xp = x;  // x^{p^i}
  for (auto c : c_) {
    acc = field_.add(acc, field_.mul(c, xp));
    xp = field_.frobenius(xp);
  }
  return acc;
}

AdditivePoly parse_additive(const UniPoly& a) {
  if (a.is_zero()) throw PreconditionError("the zero polynomial is not a valid additive polynomial here");
  const auto p = a.field().characteristic();
  std::vector<Value> c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    unsigned e = 0;
    if (i == 0 || !is_power_of(i, p, e)) {
      throw PreconditionError("not additive: exponent " + std::to_string(i) + " is not a power of " +
                              std::to_string(p));
    }
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] = a.coeffs()[i];
  }
  return AdditivePoly(a.field(), std::move(c));
}

UniPoly xf_build(const AdditivePoly& f) { return shift(f.to_unipoly(), 1); }

UniPoly even_part(const UniPoly& F) {
  std::vector<Value> v((F.coeffs().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < F.coeffs().size(); ++i) {
    if (F.coeffs()[i] == 0) continue;
    if (i % 2 != 0) throw PreconditionError("odd exponent " + std::to_string(i) + " in even_part");
    v[i / 2] = F.coeffs()[i];
  }
  return UniPoly(F.field(), std::move(v));
}

UniPoly fhat(const AdditivePoly& f) {
  if (!f.is_squarefree()) throw PreconditionError("f is not squarefree: f'(0) = 0");
  const auto& field = f.field();
  std::vector<Value> v((f.degree() - 1) / 2 + 1, 0);
  v[0] = field.add(f.coeffs()[0], f.coeffs()[0]);
  std::uint64_t pi = 1;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    pi *= field.characteristic();
    v[(pi - 1) / 2] = f.coeffs()[i];
  }
  return UniPoly(field, std::move(v));
}

CriticalValues critical_values(const AdditivePoly& f, unsigned max_ext) {
  const UniPoly fh = fhat(f);
  CriticalValues out;
  if (fh.degree() < 1) return out;
  if (max_ext == 0) max_ext = f.m();
  for (const auto& [g, mult] : factor(fh)) {
    const auto d = static_cast<unsigned>(g.degree());
    if (d > max_ext) {
      out.roots_out_of_range += d;
      continue;
    }
    const Elem fp0 = d == 1 ? f.linear_coeff() : canonical_embedding(f.field(), d)(f.linear_coeff());
    for (const auto& beta : roots_in_extension(g, d)) out.values.push_back({d, -(beta * fp0)});
  }
  std::sort(out.values.begin(), out.values.end(), [](const CriticalValue& a, const CriticalValue& b) {
    if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
    return lex_less(a.value, b.value);
  });
  return out;
}

bool is_morse(const UniPoly& A) {
  if (A.degree() < 1) throw PreconditionError("is_morse needs a nonconstant polynomial");
  const auto p = A.field().characteristic();
  if (static_cast<std::uint32_t>(A.degree()) % p == 0) {
    throw PreconditionError("is_morse needs the characteristic not to divide deg A");
  }
  if (A.degree() == 1) return true;
  const UniPoly dA = derivative(A);
  if (dA.degree() != A.degree() - 1 || !is_squarefree(dA)) return false;
  unsigned split = 1;
  for (const auto& e : factor(dA)) split = std::lcm(split, static_cast<unsigned>(e.poly.degree()));
  const auto crit = roots_in_extension(dA, split);
  if (static_cast<int>(crit.size()) != dA.degree()) return false;
  const UniPoly lifted = split == 1 ? A : lift(A, canonical_embedding(A.field(), split));
  std::set<Value> images;
  for (const auto& r : crit) {
    if (!images.insert(lifted.eval(r.value())).second) return false;
  }
  return true;
}

std::vector<AdditivePoly> enumerate_squarefree_additive(const Field& field, unsigned max_m) {
  std::vector<AdditivePoly> out;
  const Value q = field.order();
  for (unsigned m = 0; m <= max_m; ++m) {
    std::vector<Value> c(m + 1, 0);
    c[0] = 1;
    c[m] = 1;
    for (;;) {
      out.emplace_back(field, c);
      // Odometer: alpha_0 and alpha_m range over nonzero values.
      std::size_t i = 0;
      for (; i <= m; ++i) {
        const Value lo = (i == 0 || i == m) ? 1 : 0;
        if (++c[i] < q) break;
        c[i] = lo;
      }
      if (i > m) break;
    }
  }
  return out;
}

}  // namespace addsep
