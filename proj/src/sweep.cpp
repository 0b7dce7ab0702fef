#include "addsep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "addsep/error.hpp"
#include "addsep/rng.hpp"
#include "addsep/text.hpp"

namespace addsep {

namespace {

std::uint64_t count_with_m(std::uint64_t q, unsigned m) {
  if (m == 0) return q - 1;
  std::uint64_t n = (q - 1) * (q - 1);
  for (unsigned i = 1; i < m; ++i) n *= q;
  return n;
}

std::string describe(const AdditivePoly& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) s += ",";
    s += to_string(a.coeff(i));
  }
  return s + ")";
}

// Runs fn(i) for i in [0, n) on `jobs` threads; the first exception in
// index order is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned width = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::uint64_t count_squarefree_additive(const Field& field, unsigned max_m) {
  std::uint64_t n = 0;
  for (unsigned m = 0; m <= max_m; ++m) n += count_with_m(field.order(), m);
  return n;
}

AdditivePoly nth_squarefree_additive(const Field& field, unsigned max_m, std::uint64_t index) {
  const std::uint64_t q = field.order();
  for (unsigned m = 0; m <= max_m; ++m) {
    const std::uint64_t block = count_with_m(q, m);
    if (index >= block) {
      index -= block;
      continue;
    }
    // Mixed radix with alpha_0 least significant; alpha_0 and alpha_m skip 0.
    std::vector<Value> c(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
      const bool nonzero = i == 0 || i == m;
      const std::uint64_t radix = nonzero ? q - 1 : q;
      c[i] = static_cast<Value>(index % radix + (nonzero ? 1 : 0));
      index /= radix;
    }
    return AdditivePoly(field, std::move(c));
  }
  throw PreconditionError("index beyond the enumeration");
}

FSuiteOutcome check_f_suite(const AdditivePoly& f) {
  FSuiteOutcome o{f, false, false, false, ""};
  const Field& field = f.field();
  const UniPoly fh = fhat(f);
  o.fhat_ok = static_cast<std::uint64_t>(fh.degree()) == (f.degree() - 1) / 2 &&
              fh.coeff(0) == f.linear_coeff() + f.linear_coeff() && is_squarefree(fh);
  if (!o.fhat_ok) o.detail += " fhat=" + to_string(fh, 'u');

  const UniPoly F = xf_build(f);
  o.multiplicity_ok = gcd(F, derivative(F)).degree() == 1;
  unsigned max_ext = 1;
  if (fh.degree() >= 1) {
    for (const auto& e : factor(fh)) max_ext = std::max(max_ext, static_cast<unsigned>(e.poly.degree()));
  }
  const CriticalValues cv = critical_values(f, max_ext);
  if (cv.roots_out_of_range != 0) o.multiplicity_ok = false;
  for (const auto& v : cv.values) {
    const UniPoly Fd = v.ext_degree == 1 ? F : lift(F, canonical_embedding(field, v.ext_degree));
    const UniPoly g = gcd(Fd - UniPoly::constant(v.value), derivative(Fd));
    if (g.degree() != 2 || !is_squarefree(g)) {
      o.multiplicity_ok = false;
      o.detail += " gcd(F-" + to_string(v.value) + ",F')=" + to_string(g);
    }
  }
  o.morse_ok = is_morse(even_part(F));
  if (!o.morse_ok) o.detail += " A not Morse";
  return o;
}

SweepReport run_sweep(const Field& field, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t q = field.order();
  const std::uint64_t n_polys = count_squarefree_additive(field, options.max_m);

  SweepReport report;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  Rng root(options.seed);
  if (options.sample) {
    report.sampled = true;
    for (std::size_t i = 0; i < *options.sample; ++i) {
      Rng r = root.split(i);
      const std::uint64_t a = r.below(n_polys);
      pairs.emplace_back(a, r.below(n_polys));
    }
  } else {
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < 2 * (options.max_m + 1) && bound <= options.pair_ceiling; ++i) bound *= q;
    if (bound > options.pair_ceiling) {
      throw GuardrailError("exhaustive sweep over " + field.name() + " with m <= " + std::to_string(options.max_m) +
                           " exceeds the pair ceiling " + std::to_string(options.pair_ceiling) + "; use --sample");
    }
    for (std::uint64_t a = 0; a < n_polys; ++a) {
      for (std::uint64_t b = 0; b < n_polys; ++b) pairs.emplace_back(a, b);
    }
  }

  std::vector<std::optional<PairOutcome>> outcomes(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const AdditivePoly f = nth_squarefree_additive(field, options.max_m, pairs[i].first);
    const AdditivePoly g = nth_squarefree_additive(field, options.max_m, pairs[i].second);
    // The oracle seed depends only on (seed, pair index).
    const std::uint64_t seed = root.split(i).split(1).next();
    PairCheck check = verify_theorem_pair(f, g, seed, options.limits);
    PairOutcome o{i, f, g, check.pass, is_reducible(check.verdict), check.oracle.factor_count(), check.detail};
    if (!o.pass) o.detail = "f=" + describe(f) + " g=" + describe(g) + ": " + o.detail;
    outcomes[i] = std::move(o);
  });
  report.pairs = pairs.size();
  for (auto& o : outcomes) {
    if (o->pass) ++report.passed;
    if (o->reducible) ++report.reducible;
    if (!o->pass) report.failures.push_back(std::move(*o));
  }

  std::vector<std::uint64_t> swept;
  if (report.sampled) {
    for (const auto& [a, b] : pairs) {
      swept.push_back(a);
      swept.push_back(b);
    }
    std::sort(swept.begin(), swept.end());
    swept.erase(std::unique(swept.begin(), swept.end()), swept.end());
  } else {
    for (std::uint64_t a = 0; a < n_polys; ++a) swept.push_back(a);
  }
  std::vector<std::optional<FSuiteOutcome>> suite(swept.size());
  parallel_for(swept.size(), options.jobs, [&](std::size_t i) {
    suite[i] = check_f_suite(nth_squarefree_additive(field, options.max_m, swept[i]));
  });
  for (auto& s : suite) {
    if (!s->pass()) ++report.f_suite_failures;
    report.f_suite.push_back(std::move(*s));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace addsep
