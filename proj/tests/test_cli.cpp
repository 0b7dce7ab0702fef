#include <json.hpp>
#include <sstream>

#include "addsep/text.hpp"
#include "cli.hpp"
#include "doctest.h"

using namespace addsep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("cli decide") {
  auto r = run({"decide", "--p", "3", "--k", "1", "--f", "1,1", "--g", "2,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: reducible"));
  CHECK(contains(r.out, "c = g'(0)/f'(0) = 2"));
  CHECK(contains(r.out, "delta not in K"));

  r = run({"decide", "--p", "3", "--k", "1", "--f", "1,1", "--g", "1,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "delta = 1 in K"));

  r = run({"decide", "--p", "2", "--k", "1", "--f", "1", "--g", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "odd characteristic"));

  r = run({"decide", "--p", "3", "--f", "0,1", "--g", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "squarefree"));

  r = run({"decide", "--p", "3", "--f", "x^3+x^2", "--g", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "exponent 2"));

  r = run({"decide", "--p", "3", "--f", "1,,", "--g", "1"});
  CHECK(r.code == 2);

  r = run({"decide", "--p", "3", "--f", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("cli decide json schema") {
  const auto r = run({"--json", "decide", "--p", "3", "--modulus", "t^2+1", "--f", "1", "--g", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "reducible");
  CHECK(j["c"] == "2");
  CHECK(j["delta_in_field"] == "t");
  CHECK(j["factors"].is_array());
  CHECK(j["field_of_definition"] == "K");
}

TEST_CASE("cli factor") {
  auto r = run({"factor", "--p", "3", "--k", "1", "--f", "1,1", "--g", "1,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "  x+y\n  x+2*y\n  x^2+y^2+1\n"));

  r = run({"factor", "--p", "3", "--k", "1", "--f", "1,1", "--g", "2,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "  x^2+y^2\n  x^2+2*y^2+1\n"));
  CHECK(contains(r.out, "note:"));

  r = run({"factor", "--p", "3", "--k", "1", "--f", "1", "--g", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "irreducible"));
}

TEST_CASE("cli factor json round-trips through the polynomial grammar") {
  const Field f = Field::gf(3, 2);
  for (bool quad : {false, true}) {
    std::ostringstream out, err;
    std::vector<std::string> args = {"factor", "--p", "3", "--k", "1", "--f", "1,1", "--g", "2,1", "--json"};
    if (quad) args.push_back("--quad");
    REQUIRE(cli::run(args, out, err) == 0);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["field_of_definition"] == (quad ? "K(sqrt(c))" : "K"));
    for (const auto& e : j["factors"]) {
      const std::string text = e["poly"];
      CHECK(to_string(parse_bipoly(f, text)) == text);
    }
  }
}

TEST_CASE("cli oracle") {
  auto r = run({"oracle", "--p", "3", "--k", "1", "--poly", "x^2+2*y^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(x+y)*(x+2*y)"));
  r = run({"oracle", "--p", "3", "--k", "1", "--poly", "x^2+y^2"});
  CHECK(contains(r.out, "irreducible"));
  r = run({"oracle", "--p", "3", "--k", "1", "--poly", "x^2-y^2"});
  CHECK(contains(r.out, "(x+y)*(x+2*y)"));
  r = run({"oracle", "--p", "3", "--poly", "x^31+y"});
  CHECK(r.code == 3);
  r = run({"oracle", "--p", "3", "--poly", "x^2+"});
  CHECK(r.code == 2);
}

TEST_CASE("cli critical") {
  auto r = run({"critical", "--p", "3", "--k", "1", "--f", "1,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "  2 in GF(3)\n"));
  CHECK(contains(r.out, "confirmed"));
  r = run({"critical", "--p", "3", "--k", "1", "--f", "1"});
  CHECK(contains(r.out, "no nonzero critical values"));
  r = run({"critical", "--p", "3", "--k", "1", "--f", "1,0,1", "--max-ext", "2"});
  CHECK(contains(r.out, "  1 in GF(3)\n  2 in GF(3)\n  t in GF(3^2)\n  2*t in GF(3^2)\n"));
  r = run({"critical", "--p", "3", "--k", "1", "--f", "1,0,1", "--max-ext", "1"});
  CHECK(contains(r.out, "2 root(s) of fhat lie beyond"));
}

TEST_CASE("cli decompose") {
  auto r = run({"decompose", "--p", "3", "--poly", "x^10+x^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "G = u^5+u, H = x^2"));
  r = run({"decompose", "--p", "3", "--poly", "x^40"});
  CHECK(r.code == 3);
}

TEST_CASE("cli sweep") {
  auto r = run({"sweep", "--p", "3", "--k", "1", "--max-m", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "36 pairs (exhaustive)"));
  CHECK(contains(r.out, "PASS 36  FAIL 0"));

  r = run({"sweep", "--p", "3", "--k", "2", "--max-m", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--sample"));
}

TEST_CASE("cli output is determined by seed and arguments") {
  const auto a = run({"sweep", "--p", "7", "--max-m", "1", "--sample", "40", "--seed", "9", "--json"});
  const auto b = run({"sweep", "--p", "7", "--max-m", "1", "--sample", "40", "--seed", "9", "--json", "--jobs", "3"});
  const auto c = run({"sweep", "--p", "7", "--max-m", "1", "--sample", "40", "--seed", "10", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(nlohmann::json::parse(a.out)["passed"] == 40);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"decide", "--f", "1", "--g", "1"}).code == 2);
  CHECK(run({"decide", "--p", "3", "--k", "2", "--modulus", "t^3+2*t+1", "--f", "1", "--g", "1"}).code == 2);
  CHECK(run({"decide", "--p", "3", "--modulus", "t^2+2*t+1", "--f", "1", "--g", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
