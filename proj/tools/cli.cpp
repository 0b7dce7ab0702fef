#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "addsep/additive.hpp"
#include "addsep/error.hpp"
#include "addsep/oracle.hpp"
#include "addsep/selftest.hpp"
#include "addsep/sepfact.hpp"
#include "addsep/sweep.hpp"
#include "addsep/text.hpp"

namespace addsep::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::uint32_t p = 0;
  unsigned k = 1;
  std::string modulus;
  std::uint64_t seed = 0;
  bool json = false;
  unsigned jobs = 1;

  std::string f, g, poly;
  unsigned max_m = 1;
  std::optional<std::size_t> sample;
  std::uint64_t pair_ceiling = 1000;
  unsigned max_ext = 0;
  bool quad = false;
};

Field make_field(const Config& c, bool k_given) {
  const Field base = Field::gf(c.p);  // rejects p = 2 and composite p
  if (c.modulus.empty()) return Field::gf(c.p, c.k);
  auto mod = parse_modulus(c.p, c.modulus);
  if (k_given && mod.size() - 1 != c.k) {
    throw PreconditionError("--modulus has degree " + std::to_string(mod.size() - 1) + " but --k is " +
                            std::to_string(c.k));
  }
  if (mod.size() == 2) return base;
  return Field::with_modulus(c.p, std::move(mod));
}

// Coefficient vector "a0,a1,..." or a polynomial in x.
AdditivePoly read_additive(const Field& field, const std::string& text, const char* flag) {
  if (text.find_first_of("xX") != std::string::npos) return parse_additive(parse_unipoly(field, text));
  const auto elems = parse_elem_list(field, text);
  if (std::all_of(elems.begin(), elems.end(), [](const Elem& e) { return e.is_zero(); })) {
    throw PreconditionError(std::string(flag) + " is the zero polynomial");
  }
  return AdditivePoly::from_elems(elems);
}

void require_squarefree(const AdditivePoly& a, const char* name) {
  if (!a.is_squarefree()) {
    throw PreconditionError(std::string(name) + " is not squarefree: its linear coefficient " + name +
                            "'(0) is 0, but squarefree f, g (f'(0) g'(0) != 0) are required");
  }
}

std::string field_of_definition(bool extension) { return extension ? "K(sqrt(c))" : "K"; }

Json factor_list(const std::vector<BiFactor>& fs) {
  Json arr = Json::array();
  for (const auto& e : fs) arr.push_back({{"poly", to_string(e.poly)}, {"multiplicity", e.multiplicity}});
  return arr;
}

std::string product_text(const std::vector<BiFactor>& fs) {
  std::string s;
  for (const auto& e : fs) {
    if (!s.empty()) s += "*";
    s += "(" + to_string(e.poly) + ")";
    if (e.multiplicity > 1) s += "^" + std::to_string(e.multiplicity);
  }
  return s;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = is_reducible(v) ? "reducible" : "irreducible";
  j["c"] = to_string(verdict_c(v));
  j["delta_in_field"] = nullptr;
  bool extension = false;
  if (const auto* r = std::get_if<Reducible>(&v)) {
    if (const auto* d = std::get_if<InField>(&r->delta)) {
      j["delta_in_field"] = to_string(d->value);
    } else {
      extension = true;
    }
  }
  j["factors"] = Json::array();
  j["field_of_definition"] = field_of_definition(extension);
  return j;
}

int cmd_decide(const Config& c, const Field& field, std::ostream& out) {
  const AdditivePoly f = read_additive(field, c.f, "--f");
  const AdditivePoly g = read_additive(field, c.g, "--g");
  require_squarefree(f, "f");
  require_squarefree(g, "g");
  const Verdict v = decide(f, g);
  if (c.json) {
    out << verdict_json(v).dump(2) << "\n";
    return kOk;
  }
  out << "field: " << field.name() << "\n";
  out << "F(X) - G(Y) = " << to_string(expand_difference(f, g)) << "\n";
  out << "c = g'(0)/f'(0) = " << to_string(verdict_c(v)) << "\n";
  if (const auto* r = std::get_if<Reducible>(&v)) {
    out << "verdict: reducible (" << (r->kind == ScalingCase::Higher ? "deg f > 1" : "deg f = 1, delta in K") << ")\n";
    if (const auto* d = std::get_if<InField>(&r->delta)) {
      out << "delta = " << to_string(d->value) << " in K\n";
    } else {
      out << "delta not in K: c is a nonsquare, delta = sqrt(c) lies in K(sqrt(c))\n";
    }
  } else {
    out << "verdict: irreducible\n";
  }
  return kOk;
}

int cmd_factor(const Config& c, const Field& field, std::ostream& out) {
  const AdditivePoly f = read_additive(field, c.f, "--f");
  const AdditivePoly g = read_additive(field, c.g, "--g");
  require_squarefree(f, "f");
  require_squarefree(g, "g");
  const Verdict v = decide(f, g);
  const BiPoly target = expand_difference(f, g);
  if (!is_reducible(v)) {
    if (c.json) {
      Json j = verdict_json(v);
      j["factors"] = factor_list({{target, 1}});
      out << j.dump(2) << "\n";
    } else {
      out << to_string(target) << " is irreducible over " << field.name() << "\n";
    }
    return kOk;
  }
  const Factorization fz = factor_separated(f, g, {.over_quadratic_extension = c.quad});
  const bool extension = fz.field_of_definition == FieldOfDefinition::QuadraticExtension;
  if (c.json) {
    Json j = verdict_json(v);
    j["factors"] = factor_list(fz.factors);
    j["field_of_definition"] = field_of_definition(extension);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << to_string(target) << " =\n";
  for (const auto& e : fz.factors) {
    out << "  " << to_string(e.poly);
    if (e.multiplicity > 1) out << "  ^" << e.multiplicity;
    out << "\n";
  }
  out << "field of definition: "
      << (extension ? fz.factors.front().poly.field().name() + " = K(sqrt(c))" : field.name() + " = K") << "\n";
  if (!fz.note.empty()) out << "note: " << fz.note << "\n";
  return kOk;
}

int cmd_sweep(const Config& c, const Field& field, std::ostream& out) {
  SweepOptions o;
  o.max_m = c.max_m;
  o.sample = c.sample;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.pair_ceiling = c.pair_ceiling;
  if (!c.sample) {
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < 2 * (c.max_m + 1) && bound <= c.pair_ceiling; ++i) bound *= field.order();
    if (bound > c.pair_ceiling) {
      throw PreconditionError("q^(2(max_m+1)) exceeds the pair ceiling " + std::to_string(c.pair_ceiling) +
                              "; pass --sample N (and --seed) or raise --pair-ceiling");
    }
  }
  const SweepReport r = run_sweep(field, o);
  std::size_t suite_pass = r.f_suite.size() - r.f_suite_failures;
  if (c.json) {
    Json j;
    j["field"] = field.name();
    j["max_m"] = c.max_m;
    j["mode"] = r.sampled ? "sample" : "exhaustive";
    if (r.sampled) j["seed"] = c.seed;
    j["pairs"] = r.pairs;
    j["passed"] = r.passed;
    j["failed"] = r.pairs - r.passed;
    j["reducible"] = r.reducible;
    Json fails = Json::array();
    for (const auto& e : r.failures) fails.push_back({{"index", e.index}, {"detail", e.detail}});
    j["counterexamples"] = fails;
    Json suite_fails = Json::array();
    for (const auto& s : r.f_suite) {
      if (!s.pass()) suite_fails.push_back(to_string(s.f.to_unipoly()) + ":" + s.detail);
    }
    j["f_suite"] = {{"checked", r.f_suite.size()}, {"passed", suite_pass}, {"failures", suite_fails}};
    out << j.dump(2) << "\n";
  } else {
    out << "sweep " << field.name() << ", m <= " << c.max_m << ": " << r.pairs << " pairs ("
        << (r.sampled ? "sampled, seed " + std::to_string(c.seed) : std::string("exhaustive")) << ")\n";
    out << "PASS " << r.passed << "  FAIL " << r.pairs - r.passed << "  (reducible " << r.reducible << ")\n";
    for (const auto& e : r.failures) out << "COUNTEREXAMPLE #" << e.index << " " << e.detail << "\n";
    out << "f-invariant suite (fhat, gcd multiplicity pattern, Morse): " << suite_pass << "/" << r.f_suite.size()
        << " pass\n";
    for (const auto& s : r.f_suite) {
      if (!s.pass()) out << "SUITE FAILURE f = " << to_string(s.f.to_unipoly()) << ":" << s.detail << "\n";
    }
  }
  return r.ok() ? kOk : kCounterexample;
}

int cmd_oracle(const Config& c, const Field& field, std::ostream& out) {
  const BiPoly P = parse_bipoly(field, c.poly);
  OracleReport r = kronecker_factor(P, c.seed);
  const auto folded = with_unit({r.unit, r.factors});
  const bool irreducible = r.factor_count() == 1;
  if (c.json) {
    Json j;
    j["verdict"] = irreducible ? "irreducible" : "reducible";
    j["c"] = nullptr;
    j["delta_in_field"] = nullptr;
    j["factors"] = factor_list(folded);
    j["field_of_definition"] = "K";
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (irreducible) {
    out << to_string(P) << " is irreducible over " << field.name() << "\n";
  } else {
    out << to_string(P) << " = " << product_text(folded) << "\n";
  }
  return kOk;
}

int cmd_critical(const Config& c, const Field& field, std::ostream& out) {
  const AdditivePoly f = read_additive(field, c.f, "--f");
  require_squarefree(f, "f");
  const CriticalValues cv = critical_values(f, c.max_ext);
  const UniPoly F = xf_build(f);
  bool pattern = gcd(F, derivative(F)).degree() == 1;
  for (const auto& v : cv.values) {
    const UniPoly Fd = v.ext_degree == 1 ? F : lift(F, canonical_embedding(field, v.ext_degree));
    const UniPoly g = gcd(Fd - UniPoly::constant(v.value), derivative(Fd));
    if (g.degree() != 2 || !is_squarefree(g)) pattern = false;
  }
  if (c.json) {
    Json values = Json::array();
    for (const auto& v : cv.values) {
      values.push_back({{"ext_degree", v.ext_degree}, {"field", v.value.field().name()}, {"value", to_string(v.value)}});
    }
    Json j;
    j["F"] = to_string(F);
    j["values"] = values;
    j["roots_out_of_range"] = cv.roots_out_of_range;
    j["multiplicity_pattern"] = pattern;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "F = " << to_string(F) << "\n";
  if (cv.values.empty()) {
    out << "no nonzero critical values";
    if (cv.roots_out_of_range) out << " within the searched extensions";
    out << "\n";
  } else {
    out << "nonzero critical values (-beta*f'(0) for fhat(beta) = 0):\n";
    for (const auto& v : cv.values) out << "  " << to_string(v.value) << " in " << v.value.field().name() << "\n";
  }
  if (cv.roots_out_of_range) {
    out << cv.roots_out_of_range << " root(s) of fhat lie beyond the searched extensions (raise --max-ext)\n";
  }
  out << "multiplicity pattern (gcd(F, F') of degree 1; gcd(F-gamma, F') squarefree of degree 2): "
      << (pattern ? "confirmed" : "VIOLATED") << "\n";
  return pattern ? kOk : kCounterexample;
}

int cmd_decompose(const Config& c, const Field& field, std::ostream& out) {
  const UniPoly F = parse_unipoly(field, c.poly);
  const auto d = decompose_all(F);
  if (c.json) {
    Json arr = Json::array();
    for (const auto& x : d) arr.push_back({{"G", to_string(x.outer, 'u')}, {"H", to_string(x.inner)}});
    out << Json{{"F", to_string(F)}, {"decompositions", arr}}.dump(2) << "\n";
    return kOk;
  }
  if (d.empty()) {
    out << to_string(F) << " has no nontrivial decomposition over " << field.name() << "\n";
    return kOk;
  }
  out << to_string(F) << " = G(H(x)) with H monic, H(0) = 0:\n";
  for (const auto& x : d) out << "  G = " << to_string(x.outer, 'u') << ", H = " << to_string(x.inner) << "\n";
  return kOk;
}

int cmd_selftest(const Config& c, std::ostream& out) {
  const auto results = run_selftest(c.seed);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (c.json) {
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
  }
  if (c.json) out << arr.dump(2) << "\n";
  return ok ? kOk : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reducibility and factorization of X f(X) - Y g(Y) for additive f, g over odd-characteristic finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  auto* p_opt = app.add_option("--p", c.p, "characteristic (odd prime)");
  auto* k_opt = app.add_option("--k", c.k, "extension degree; K = GF(p^k)")->check(CLI::Range(1u, 20u));
  app.add_option("--modulus", c.modulus, "monic irreducible modulus in t, e.g. \"t^2+1\"");
  app.add_option("--seed", c.seed, "seed for every randomized step");
  app.add_flag("--json", c.json, "JSON output");
  app.add_option("--jobs", c.jobs, "worker threads for sweep")->check(CLI::Range(1u, 256u));

  const char* vec_help = "additive polynomial: coefficient vector alpha_0,...,alpha_m or a polynomial in x";
  auto* decide = app.add_subcommand("decide", "decide reducibility of X f(X) - Y g(Y)");
  decide->add_option("--f", c.f, vec_help)->required();
  decide->add_option("--g", c.g, vec_help)->required();

  auto* factor = app.add_subcommand("factor", "explicit factorization of X f(X) - Y g(Y) over K");
  factor->add_option("--f", c.f, vec_help)->required();
  factor->add_option("--g", c.g, vec_help)->required();
  factor->add_flag("--quad", c.quad, "split X^2 - cY^2 over the quadratic extension when c is a nonsquare");

  auto* sweep = app.add_subcommand("sweep", "verify every (or a seeded sample of) pair against the oracle");
  sweep->add_option("--max-m", c.max_m, "largest m with deg f = p^m")->required();
  sweep->add_option("--sample", c.sample, "number of pairs drawn with replacement");
  sweep->add_option("--pair-ceiling", c.pair_ceiling, "largest q^(2(max_m+1)) swept exhaustively");

  auto* oracle = app.add_subcommand("oracle", "brute-force bivariate factorization");
  oracle->add_option("--poly", c.poly, "polynomial in x, y")->required();

  auto* critical = app.add_subcommand("critical", "nonzero critical values of F = X f(X)");
  critical->add_option("--f", c.f, vec_help)->required();
  critical->add_option("--max-ext", c.max_ext, "largest extension degree searched (default m)");

  auto* decompose = app.add_subcommand("decompose", "all decompositions F = G(H) with 1 < deg H < deg F");
  decompose->add_option("--poly", c.poly, "polynomial in x")->required();

  auto* selftest = app.add_subcommand("selftest", "run every module invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(c, out);
    if (p_opt->count() == 0) throw PreconditionError("--p is required");
    const Field field = make_field(c, k_opt->count() > 0);
    if (decide->parsed()) return cmd_decide(c, field, out);
    if (factor->parsed()) return cmd_factor(c, field, out);
    if (sweep->parsed()) return cmd_sweep(c, field, out);
    if (oracle->parsed()) return cmd_oracle(c, field, out);
    if (critical->parsed()) return cmd_critical(c, field, out);
    if (decompose->parsed()) return cmd_decompose(c, field, out);
  } catch (const GuardrailError& e) {
    err << "refused: " << e.what() << "\n";
    return kGuardrail;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace addsep::cli
