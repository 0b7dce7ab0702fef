#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "addsep/bipoly.hpp"
#include "addsep/sepfact.hpp"
#include "addsep/unipoly.hpp"

namespace addsep {

struct OracleLimits {
  int max_total_degree = 30;
  std::uint32_t max_field_order = 81;
  // Univariate factors (counted with multiplicity) of the Kronecker image.
  std::size_t max_univariate_factors = 32;
};

struct OracleReport {
  BiPoly input;
  Elem unit;
  // Monic irreducible factors in canonical order.
  std::vector<BiFactor> factors;
  std::chrono::nanoseconds elapsed{0};
  std::string method;
  std::size_t univariate_factors = 0;
  std::size_t trial_divisions = 0;

  // Irreducible factors counted with multiplicity.
  int factor_count() const;
};

// Complete factorization over the base field by Kronecker substitution:
// X -> T^e, Y -> T with e = deg_Y(P) + 1, factor the image, then
// recombine subsets of univariate factors by exact bivariate trial
// division. Throws GuardrailError outside the configured limits.
OracleReport kronecker_factor(const BiPoly& P, std::uint64_t seed = 0, const OracleLimits& limits = {});

bool is_irreducible_bivariate(const BiPoly& P, std::uint64_t seed = 0, const OracleLimits& limits = {});

// P(T^e, T). Requires deg_Y(P) < e.
UniPoly kronecker_image(const BiPoly& P, int e);
// Reads T^n back as X^{n / e} Y^{n mod e}.
BiPoly kronecker_invert(const UniPoly& image, int e);

struct DecomposeLimits {
  int max_degree = 24;
  std::uint64_t max_candidates = 1u << 20;
};

struct Decomposition {
  UniPoly outer;  // G
  UniPoly inner;  // H, monic with H(0) = 0
};

// Every G o H = F with 1 < deg H < deg F, H normalized monic with zero
// constant term, found by exhaustive search over normalized H and
// H-adic expansion of F. Sorted by (deg H, H).
std::vector<Decomposition> decompose_all(const UniPoly& F, const DecomposeLimits& limits = {});

struct PairCheck {
  bool pass;
  Verdict verdict;
  std::optional<Factorization> factorization;
  OracleReport oracle;
  std::string detail;
};

// decide/factor_separated against kronecker_factor on X f(X) - Y g(Y).
PairCheck verify_theorem_pair(const AdditivePoly& f, const AdditivePoly& g, std::uint64_t seed = 0,
                              const OracleLimits& limits = {});

}  // namespace addsep
