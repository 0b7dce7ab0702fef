#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "addsep/bipoly.hpp"
#include "addsep/gf.hpp"
#include "addsep/unipoly.hpp"

namespace addsep {

// Text grammar shared by elements and polynomials:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := primary ['^' integer]
//   primary:= integer | variable | '(' expr ')'
//
// Elements are expressions in t (reduced modulo the field's modulus; t is
// rejected over a prime field). Univariate polynomials are expressions in
// x with element coefficients, bivariate ones in x and y. Variable names
// are case-insensitive. Parse failures throw ParseError.

Elem parse_elem(const Field& field, std::string_view text);
// Comma-separated element list, e.g. "1,t+1,2".
std::vector<Elem> parse_elem_list(const Field& field, std::string_view text);
UniPoly parse_unipoly(const Field& field, std::string_view text);
BiPoly parse_bipoly(const Field& field, std::string_view text);
// Monic modulus in t over GF(p), e.g. "t^2+1", as coefficients constant first.
std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text);

std::string to_string(const Elem& e);
std::string to_string(const UniPoly& a, char var = 'x');
std::string to_string(const BiPoly& a);

}  // namespace addsep
