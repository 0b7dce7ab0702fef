#include "addsep/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "addsep/error.hpp"
#include "addsep/text.hpp"

namespace addsep {

namespace {

using Clock = std::chrono::steady_clock;

BiPoly shift_down(const BiPoly& a, Monomial m) {
  BiPoly::Terms t;
  for (const auto& [mono, c] : a.terms()) t.emplace(Monomial{mono.x - m.x, mono.y - m.y}, c);
  return BiPoly(a.field(), std::move(t));
}

struct Recombination {
  std::vector<BiPoly> found;
  std::size_t trials = 0;
};

// Pool is sorted canonically so equal univariate factors are adjacent;
// each multiset of size s is tried once.
Recombination recombine(BiPoly cur, std::vector<UniPoly> pool, int e) {
  Recombination out;
  std::size_t s = 1;
  std::vector<std::size_t> chosen;
  while (2 * s <= pool.size()) {
    std::optional<BiPoly> quotient;
    BiPoly candidate(cur.field());
    std::function<bool(std::size_t, const UniPoly&)> search = [&](std::size_t start, const UniPoly& prod) {
      if (chosen.size() == s) {
        ++out.trials;
        candidate = kronecker_invert(prod, e);
        quotient = exact_divide(cur, candidate);
        return quotient.has_value();
      }
      const std::size_t need = s - chosen.size();
      for (std::size_t i = start; i + need <= pool.size(); ++i) {
        if (i > start && pool[i] == pool[i - 1]) continue;
        chosen.push_back(i);
        if (search(i + 1, prod * pool[i])) return true;
        chosen.pop_back();
      }
      return false;
    };
    chosen.clear();
    if (search(0, UniPoly::constant(Elem::one(cur.field())))) {
      out.found.push_back(monic(candidate));
      cur = std::move(*quotient);
      for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) pool.erase(pool.begin() + static_cast<long>(*it));
    } else {
      ++s;
    }
  }
  if (!cur.is_constant()) out.found.push_back(monic(cur));
  return out;
}

}  // namespace

int OracleReport::factor_count() const {
  int n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

UniPoly kronecker_image(const BiPoly& P, int e) {
  if (P.is_zero()) return UniPoly(P.field());
  if (P.deg_y() >= e) throw PreconditionError("kronecker_image: deg_Y must be below the substitution exponent");
  std::vector<Value> v(static_cast<std::size_t>(e) * P.deg_x() + P.deg_y() + 1, 0);
  for (const auto& [m, c] : P.terms()) v[static_cast<std::size_t>(e) * m.x + m.y] = c;
  return UniPoly(P.field(), std::move(v));
}

BiPoly kronecker_invert(const UniPoly& image, int e) {
  if (e < 1) throw PreconditionError("kronecker_invert: exponent must be positive");
  BiPoly::Terms t;
  for (std::size_t n = 0; n < image.coeffs().size(); ++n) {
    if (image.coeffs()[n] == 0) continue;
    t.emplace(Monomial{static_cast<int>(n) / e, static_cast<int>(n) % e}, image.coeffs()[n]);
  }
  return BiPoly(image.field(), std::move(t));
}

OracleReport kronecker_factor(const BiPoly& P, std::uint64_t seed, const OracleLimits& limits) {
  const auto start = Clock::now();
  if (P.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  if (P.total_degree() > limits.max_total_degree) {
    throw GuardrailError("oracle refuses total degree " + std::to_string(P.total_degree()) + " > " +
                         std::to_string(limits.max_total_degree));
  }
  if (P.field().order() > limits.max_field_order) {
    throw GuardrailError("oracle refuses field order " + std::to_string(P.field().order()) + " > " +
                         std::to_string(limits.max_field_order));
  }
  OracleReport r{.input = P, .unit = P.leading_coeff(), .factors = {}, .method = "kronecker"};
  const Field& field = P.field();

  Monomial content{P.deg_x(), P.deg_y()};
  for (const auto& [m, c] : P.terms()) {
    content.x = std::min(content.x, m.x);
    content.y = std::min(content.y, m.y);
  }
  std::vector<BiFactor> raw;
  if (content.x > 0) raw.push_back({BiPoly::monomial(Elem::one(field), {1, 0}), content.x});
  if (content.y > 0) raw.push_back({BiPoly::monomial(Elem::one(field), {0, 1}), content.y});

  const BiPoly core = shift_down(monic(P), content);
  if (!core.is_constant()) {
    const int e = core.deg_y() + 1;
    std::vector<UniPoly> pool;
    for (const auto& [g, mult] : factor(kronecker_image(core, e), seed)) {
      for (int i = 0; i < mult; ++i) pool.push_back(g);
    }
    r.univariate_factors = pool.size();
    if (pool.size() > limits.max_univariate_factors) {
      throw GuardrailError("oracle refuses " + std::to_string(pool.size()) + " univariate factors > " +
                           std::to_string(limits.max_univariate_factors));
    }
    auto rec = recombine(core, std::move(pool), e);
    r.trial_divisions = rec.trials;
    for (auto& b : rec.found) raw.push_back({std::move(b), 1});
  }
  if (!raw.empty()) r.factors = normalize(raw).factors;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

bool is_irreducible_bivariate(const BiPoly& P, std::uint64_t seed, const OracleLimits& limits) {
  if (P.is_constant()) return false;
  return kronecker_factor(P, seed, limits).factor_count() == 1;
}

std::vector<Decomposition> decompose_all(const UniPoly& F, const DecomposeLimits& limits) {
  const int n = F.degree();
  if (n < 2) throw PreconditionError("decompose_all needs deg F >= 2");
  if (n > limits.max_degree) {
    throw GuardrailError("decompose_all refuses degree " + std::to_string(n) + " > " +
                         std::to_string(limits.max_degree));
  }
  const Field& field = F.field();
  const std::uint64_t q = field.order();
  std::vector<Decomposition> out;
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    std::uint64_t count = 1;
    for (int i = 1; i < d; ++i) {
      count *= q;
      if (count > limits.max_candidates) {
        throw GuardrailError("decompose_all refuses more than " + std::to_string(limits.max_candidates) +
                             " inner candidates of degree " + std::to_string(d));
      }
    }
    // H = X^d + h_{d-1} X^{d-1} + ... + h_1 X, odometer over (h_1, ..., h_{d-1}).
    std::vector<Value> h(d + 1, 0);
    h[d] = field.from_int(1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (int i = 1; i < d; ++i) {
        h[i] = static_cast<Value>(rest % q);
        rest /= q;
      }
      const UniPoly H(field, h);
      std::vector<Value> g;
      UniPoly cur = F;
      bool ok = true;
      while (!cur.is_zero()) {
        auto [quo, rem] = divrem(cur, H);
        if (rem.degree() > 0) {
          ok = false;
          break;
        }
        g.push_back(rem.raw(0));
        cur = std::move(quo);
      }
      if (!ok) continue;
      UniPoly G(field, std::move(g));
      if (!(compose(G, H) == F)) continue;
      out.push_back({std::move(G), H});
    }
  }
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.inner.degree() != b.inner.degree()) return a.inner.degree() < b.inner.degree();
    return canonical_less(a.inner, b.inner);
  });
  return out;
}

PairCheck verify_theorem_pair(const AdditivePoly& f, const AdditivePoly& g, std::uint64_t seed,
                              const OracleLimits& limits) {
  Verdict verdict = decide(f, g);
  OracleReport oracle = kronecker_factor(expand_difference(f, g), seed, limits);
  const bool oracle_reducible = oracle.factor_count() >= 2;
  std::optional<Factorization> fz;
  std::ostringstream detail;
  bool pass = is_reducible(verdict) == oracle_reducible;
  if (!pass) {
    detail << "decide says " << (is_reducible(verdict) ? "reducible" : "irreducible") << ", oracle found "
           << oracle.factor_count() << " factor(s)";
  } else if (oracle_reducible) {
    fz = factor_separated(f, g);
    const NormalizedFactors n = normalize(fz->factors);
    pass = n.unit == oracle.unit && n.factors == oracle.factors;
    if (!pass) {
      detail << "factor sets differ:";
      for (const auto& e : n.factors) detail << " [" << to_string(e.poly) << "]^" << e.multiplicity;
      detail << " vs oracle";
      for (const auto& e : oracle.factors) detail << " [" << to_string(e.poly) << "]^" << e.multiplicity;
    }
  }
  return PairCheck{pass, std::move(verdict), std::move(fz), std::move(oracle), detail.str()};
}

}  // namespace addsep
