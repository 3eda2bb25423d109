#pragma once

#include "opalg/dsl/ast.hpp"
#include "opalg/expr.hpp"

#include <string>

namespace opalg::dsl {

// Canonical, reparseable rendering of a normal form. Terms print in the
// normal-form order; coefficients with both real and imaginary parts split
// into two printed terms (they merge back on reparsing).
std::string print_expr(const Expr& e);

// Script-syntax rendering; sum binders print as their expanded three-term sum.
std::string format_node(const NodePtr& n);
std::string format_script(const Script& s);

}  // namespace opalg::dsl
