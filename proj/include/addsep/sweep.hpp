#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addsep/additive.hpp"
#include "addsep/oracle.hpp"

namespace addsep {

struct SweepOptions {
  unsigned max_m = 1;
  // Draw this many (f, g) pairs with replacement instead of enumerating.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  // Exhaustive sweeps are refused when q^{2 (max_m + 1)} exceeds this.
  std::uint64_t pair_ceiling = 1000;
  OracleLimits limits;
};

struct PairOutcome {
  std::size_t index = 0;
  AdditivePoly f;
  AdditivePoly g;
  bool pass = false;
  bool reducible = false;
  int oracle_factors = 0;
  std::string detail;
};

// Per-f invariants on F = X f(X): fhat shape, the gcd multiplicity pattern
// at every nonzero critical value, and the Morse property of A.
struct FSuiteOutcome {
  AdditivePoly f;
  bool fhat_ok = false;
  bool multiplicity_ok = false;
  bool morse_ok = false;
  std::string detail;
  bool pass() const { return fhat_ok && multiplicity_ok && morse_ok; }
};

struct SweepReport {
  bool sampled = false;
  std::size_t pairs = 0;
  std::size_t passed = 0;
  std::size_t reducible = 0;
  std::vector<PairOutcome> failures;
  std::vector<FSuiteOutcome> f_suite;
  std::size_t f_suite_failures = 0;
  double seconds = 0;
  bool ok() const { return passed == pairs && f_suite_failures == 0; }
};

// Number of squarefree additive polynomials with m <= max_m.
std::uint64_t count_squarefree_additive(const Field& field, unsigned max_m);
// The index-th entry of enumerate_squarefree_additive(field, max_m).
AdditivePoly nth_squarefree_additive(const Field& field, unsigned max_m, std::uint64_t index);

FSuiteOutcome check_f_suite(const AdditivePoly& f);

// Results are reduced in enumeration (or draw) order, so the report does
// not depend on jobs. Throws GuardrailError when an exhaustive sweep
// exceeds the pair ceiling.
SweepReport run_sweep(const Field& field, const SweepOptions& options);

}  // namespace addsep
