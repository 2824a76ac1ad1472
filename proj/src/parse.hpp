#pragma once

#include "diffpoly.hpp"

#include <map>
#include <string>

namespace lenard {

// Component-name table for parsing. D == 2 gets the traditional u, v aliases;
// every dimension accepts u0, u1, ...
std::map<std::string, int> default_comp_names(int comps);

// Parses the canonical polynomial syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' uint]
//   primary:= rational | 'x' | name | name '[' uint ']' | 'u[' m ',' j ']' | '(' expr ')'
// A bare component name means jet order 0; name[j] is its j-th derivative.
// Unknown identifiers are treated as symbolic parameters.
DiffPoly parse_poly(int comps, const std::string& text,
                    const std::map<std::string, int>& comp_names);

DiffPoly parse_poly(int comps, const std::string& text);

}  // namespace lenard
