#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace addsep {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The two factorization goldens over GF(3): factor lists, product identity and
// oracle irreducibility of every nonlinear factor.
CheckResult check_goldens();

// decompose_all on X^4+X^2, X^10+X^2 over GF(3) and X^6+X^2 over GF(5):
// exactly one normalized decomposition each, with right component X^2.
CheckResult check_decompositions();

// `count` random products of irreducible polynomials of total degree <= 3
// over each of GF(3) and GF(5) must refactor to the planted multiset.
// Irreducibility of the planted factors is established by exhaustive trial
// division, not by the oracle under test.
CheckResult check_oracle_selftest(std::uint64_t seed, std::size_t count = 100);

// g = delta f(delta Y) built by literal composition must satisfy
// matches_scaling(f, g, delta^2).
CheckResult check_scaling_shortcut(std::uint64_t seed, std::size_t count = 1000);

// Field axioms and Frobenius over every field with q <= 49.
CheckResult check_field_axioms();

// Univariate factor completeness on random inputs.
CheckResult check_unipoly_factor(std::uint64_t seed, std::size_t count = 200);

// Every check above plus the per-f invariant suite over GF(3) m <= 2 and
// GF(5) m <= 1.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace addsep
