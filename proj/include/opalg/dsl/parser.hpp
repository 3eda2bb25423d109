#pragma once

#include "opalg/dsl/ast.hpp"

#include <string>

namespace opalg::dsl {

// Parses a whole script. Rejects undeclared names, unbound index variables and
// malformed axiom rules with a ParseError whose span points into the offending
// token.
Script parse(const std::string& text);

// Parses a single expression (no binders in scope). Handy for tests and for
// building expected values compactly.
NodePtr parse_expr_text(const std::string& text);

}  // namespace opalg::dsl
