#include "addsep/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "addsep/oracle.hpp"
#include "addsep/rng.hpp"
#include "addsep/sepfact.hpp"
#include "addsep/sweep.hpp"
#include "addsep/text.hpp"

namespace addsep {

namespace {

AdditivePoly additive(const Field& f, std::initializer_list<long long> c) {
  std::vector<Value> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return AdditivePoly(f, v);
}

BiPoly random_bipoly(const Field& f, int degree, Rng& rng) {
  for (;;) {
    BiPoly b(f);
    for (int i = 0; i <= degree; ++i) {
      for (int j = 0; i + j <= degree; ++j) b.add_term({i, j}, static_cast<Value>(rng.below(f.order())));
    }
    if (b.total_degree() == degree) return monic(b);
  }
}

// Exhaustive search over monic divisors of total degree <= deg P / 2.
bool irreducible_by_trial_division(const BiPoly& P) {
  const Field& f = P.field();
  const int n = P.total_degree();
  for (int d = 1; 2 * d <= n; ++d) {
    for (int lead = 0; lead <= d; ++lead) {
      const Monomial lm{lead, d - lead};
      std::vector<Monomial> lower;
      for (int t = 0; t <= d; ++t) {
        for (int x = 0; x <= t; ++x) {
          const Monomial m{x, t - x};
          if (grlex_less(m, lm)) lower.push_back(m);
        }
      }
      std::vector<Value> c(lower.size(), 0);
      for (;;) {
        BiPoly q = BiPoly::monomial(Elem::one(f), lm);
        for (std::size_t i = 0; i < lower.size(); ++i) q.add_term(lower[i], c[i]);
        if (exact_divide(P, q)) return false;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == f.order()) c[i++] = 0;
        if (i == c.size()) break;
      }
    }
  }
  return true;
}

std::string join(const std::vector<BiFactor>& fs) {
  std::string s;
  for (const auto& e : fs) {
    s += "(" + to_string(e.poly) + ")";
    if (e.multiplicity > 1) s += "^" + std::to_string(e.multiplicity);
  }
  return s;
}

}  // namespace

CheckResult check_goldens() {
  CheckResult r{"goldens", true, ""};
  const Field f = Field::gf(3);
  struct Golden {
    AdditivePoly f, g;
    std::vector<std::string> want;
  };
  const std::vector<Golden> goldens = {
      {additive(f, {1, 1}), additive(f, {1, 1}), {"x+y", "x+2*y", "x^2+y^2+1"}},
      {additive(f, {1, 1}), additive(f, {2, 1}), {"x^2+y^2", "x^2+2*y^2+1"}},
  };
  std::ostringstream out;
  for (const auto& g : goldens) {
    const Factorization fz = factor_separated(g.f, g.g);
    std::vector<std::string> got;
    for (const auto& e : fz.factors) got.push_back(to_string(e.poly));
    const bool list_ok = got == g.want && std::all_of(fz.factors.begin(), fz.factors.end(),
                                                      [](const BiFactor& e) { return e.multiplicity == 1; });
    const bool product_ok = expand(fz) == expand_difference(g.f, g.g);
    bool irreducible_ok = true;
    for (const auto& e : fz.factors) {
      if (e.poly.total_degree() > 1 && !is_irreducible_bivariate(e.poly)) irreducible_ok = false;
    }
    if (!(list_ok && product_ok && irreducible_ok)) r.pass = false;
    out << join(fz.factors) << (product_ok ? " product ok" : " PRODUCT MISMATCH")
        << (irreducible_ok ? ", nonlinear factors irreducible" : ", REDUCIBLE FACTOR");
    if (&g != &goldens.back()) out << "; ";
  }
  r.detail = out.str();
  return r;
}

CheckResult check_decompositions() {
  CheckResult r{"decompositions", true, ""};
  const Field f3 = Field::gf(3);
  const Field f5 = Field::gf(5);
  const std::vector<UniPoly> inputs = {
      UniPoly::from_ints(f3, {0, 0, 1, 0, 1}),
      UniPoly::from_ints(f3, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}),
      UniPoly::from_ints(f5, {0, 0, 1, 0, 0, 0, 1}),
  };
  std::ostringstream out;
  for (const auto& F : inputs) {
    const auto d = decompose_all(F);
    const bool ok = d.size() == 1 && d[0].inner == UniPoly::from_ints(F.field(), {0, 0, 1});
    if (!ok) r.pass = false;
    out << F.field().name() << " " << to_string(F) << ":";
    for (const auto& x : d) out << " (" << to_string(x.outer, 'u') << ", " << to_string(x.inner) << ")";
    if (&F != &inputs.back()) out << "; ";
  }
  r.detail = out.str();
  return r;
}

CheckResult check_oracle_selftest(std::uint64_t seed, std::size_t count) {
  CheckResult r{"oracle self-test", true, ""};
  std::size_t exact = 0, total = 0;
  std::string first_failure;
  for (std::uint32_t p : {3u, 5u}) {
    const Field f = Field::gf(p);
    Rng rng = Rng(seed).split(p);
    for (std::size_t trial = 0; trial < count; ++trial) {
      std::vector<BiFactor> planted;
      BiPoly product = BiPoly::constant(Elem::one(f));
      const int factors = 2 + static_cast<int>(rng.below(2));
      for (int i = 0; i < factors; ++i) {
        BiPoly b(f);
        do {
          b = random_bipoly(f, 1 + static_cast<int>(rng.below(3)), rng);
        } while (!irreducible_by_trial_division(b));
        planted.push_back({b, 1});
        product = product * b;
      }
      const Elem unit(f, static_cast<Value>(1 + rng.below(p - 1)));
      product = scale(product, unit);
      const OracleReport got = kronecker_factor(product, rng.next());
      const NormalizedFactors want = normalize(planted);
      ++total;
      if (got.unit == unit && got.factors == want.factors) {
        ++exact;
      } else if (first_failure.empty()) {
        first_failure = " first failure over " + f.name() + ": planted " + join(want.factors) + " got " + join(got.factors);
      }
    }
  }
  r.pass = exact == total;
  r.detail = std::to_string(exact) + "/" + std::to_string(total) + " exact" + first_failure;
  return r;
}

CheckResult check_scaling_shortcut(std::uint64_t seed, std::size_t count) {
  CheckResult r{"scaling shortcut", true, ""};
  const std::vector<std::pair<std::uint32_t, unsigned>> fields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}};
  std::size_t ok = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng(seed).split(i);
    const auto [p, k] = fields[rng.below(fields.size())];
    const Field f = Field::gf(p, k);
    const unsigned m = static_cast<unsigned>(rng.below(3));
    std::vector<Value> c(m + 1);
    for (auto& x : c) x = static_cast<Value>(rng.below(f.order()));
    c[0] = static_cast<Value>(1 + rng.below(f.order() - 1));
    c[m] = static_cast<Value>(1 + rng.below(f.order() - 1));
    const AdditivePoly a(f, c);
    const Elem delta(f, static_cast<Value>(1 + rng.below(f.order() - 1)));
    const UniPoly literal = scale(compose(a.to_unipoly(), UniPoly::monomial(delta, 1)), delta);
    const AdditivePoly g = parse_additive(literal);
    if (matches_scaling(a, g, delta * delta)) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = " first failure over " + f.name() + ": f=" + to_string(a.to_unipoly()) + " delta=" + to_string(delta);
    }
  }
  r.pass = ok == count;
  r.detail = std::to_string(ok) + "/" + std::to_string(count) + " true" + first_failure;
  return r;
}

CheckResult check_field_axioms() {
  CheckResult r{"field axioms", true, ""};
  std::size_t fields = 0;
  for (std::uint32_t q = 3; q <= 49; ++q) {
    std::uint32_t p = 0;
    unsigned k = 0;
    for (std::uint32_t c = 3; c <= q; c += 2) {
      if (!is_prime(c)) continue;
      std::uint32_t x = q;
      unsigned e = 0;
      while (x % c == 0) x /= c, ++e;
      if (x == 1) p = c, k = e;
    }
    if (p == 0) continue;
    const Field f = Field::gf(p, k);
    ++fields;
    for (Value a = 0; a < q; ++a) {
      if (f.frobenius(a) != f.pow(a, p) || f.pow(a, q) != a) r.pass = false;
      if (a != 0 && f.mul(a, f.inv(a)) != f.from_int(1)) r.pass = false;
      for (Value b = 0; b < q; ++b) {
        if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) r.pass = false;
        if (f.frobenius(f.add(a, b)) != f.add(f.frobenius(a), f.frobenius(b))) r.pass = false;
        if (f.frobenius(f.mul(a, b)) != f.mul(f.frobenius(a), f.frobenius(b))) r.pass = false;
        const Value c = static_cast<Value>((a * 7 + b * 3) % q);
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) r.pass = false;
      }
    }
    if (!r.pass) {
      r.detail = "failure in " + f.name();
      return r;
    }
  }
  r.detail = std::to_string(fields) + " fields with q <= 49";
  return r;
}

CheckResult check_unipoly_factor(std::uint64_t seed, std::size_t count) {
  CheckResult r{"univariate factorization", true, ""};
  const std::vector<std::pair<std::uint32_t, unsigned>> fields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}};
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng(seed).split(i);
    const auto [p, k] = fields[rng.below(fields.size())];
    const Field f = Field::gf(p, k);
    std::vector<Value> c(2 + rng.below(14));
    for (auto& x : c) x = static_cast<Value>(rng.below(f.order()));
    if (c.back() == 0) c.back() = 1;
    const UniPoly a(f, c);
    UniPoly product = UniPoly::constant(a.leading());
    bool ok = true;
    for (const auto& e : factor(a, rng.next())) {
      if (!e.poly.is_monic() || e.poly.degree() < 1) ok = false;
      // An irreducible of degree d divides X^{q^d} - X and shares no factor with X^{q^j} - X for j < d.
      const UniPoly x = UniPoly::x(f);
      UniPoly xq = x;
      for (int j = 1; j <= e.poly.degree(); ++j) {
        xq = powmod(xq, f.order(), e.poly);
        const UniPoly g = gcd(xq - x, e.poly);
        if (j < e.poly.degree() ? g.degree() != 0 : !(g == e.poly)) ok = false;
      }
      for (int m = 0; m < e.multiplicity; ++m) product = product * e.poly;
    }
    if (!ok || !(product == a)) {
      r.pass = false;
      r.detail = "failure on " + f.name() + " " + to_string(a);
      return r;
    }
  }
  r.detail = std::to_string(count) + " random polynomials";
  return r;
}

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_field_axioms());
  out.push_back(check_unipoly_factor(seed));
  out.push_back(check_goldens());
  out.push_back(check_decompositions());
  out.push_back(check_oracle_selftest(seed));
  out.push_back(check_scaling_shortcut(seed));
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 1u}}) {
    const Field f = Field::gf(p);
    CheckResult r{"f-invariant suite " + f.name(), true, ""};
    std::size_t n = 0, bad = 0;
    for (const auto& a : enumerate_squarefree_additive(f, m)) {
      ++n;
      const FSuiteOutcome o = check_f_suite(a);
      if (!o.pass()) {
        ++bad;
        if (r.detail.empty()) r.detail = "failure:" + o.detail + "; ";
      }
    }
    r.pass = bad == 0;
    r.detail += std::to_string(n - bad) + "/" + std::to_string(n) + " f pass";
    out.push_back(r);
  }
  return out;
}

}  // namespace addsep
