#pragma once

#include <string>

#include "lgr/pde_poly.hpp"

namespace lgr {

// Expression language over the p-variables. Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := "-" factor | base ("^" uint)?
//   base   := rational | pvar | "det" "(" "p" ")" | "tr" "(" "p" ")"
//           | "minor" "(" "p" ";" idxlist ";" idxlist ")" | "(" expr ")"
//   pvar   := "p" digit digit ;  rational := uint ("/" uint)?
//   idxlist := (uint ("," uint)*)?
// Explicit "*" everywhere, no juxtaposition. det/tr/minor accept the bare
// matrix token "p" only and are lowered to explicit polynomials.
PdePolynomial parse_pde(const std::string& text, int n);

// Canonical text; parse_pde(format_pde(f), f.n()) == f.
std::string format_pde(const PdePolynomial& f);

}  // namespace lgr
