#pragma once

#include "opalg/atom.hpp"
#include "opalg/errors.hpp"
#include "opalg/expr.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace opalg::dsl {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Index position: either a literal 1..3 or a bound index variable.
struct IdxRef {
    int value = 0;
    std::string var;
    bool is_var() const { return !var.empty(); }
};

struct AtomSpec {
    AtomKind kind = AtomKind::Id;
    IdxRef index;
    int power = 1;  // Hpow only
};

struct Node {
    enum class Kind { ScalarLit, AtomLit, NameRef, Sum, Prod, Comm, Ddt, IdxBind };

    Kind kind = Kind::ScalarLit;
    SourceSpan span;

    Scalar scalar;              // ScalarLit
    AtomSpec atom;              // AtomLit
    std::string name;           // NameRef, IdxBind variable
    int bind_value = 0;         // IdxBind
    std::vector<NodePtr> kids;  // Sum/Prod children, Comm two, Ddt/IdxBind one
    std::vector<int> signs;     // Sum only, +1/-1 per child
};

// Axiom-set member, fully resolved at parse time.
struct RuleDecl {
    enum class Kind { Comm, Def, Family };
    Kind kind = Kind::Comm;
    SourceSpan span;

    Atom a, b;                      // Comm: [a, b] = value
    Expr value;                     // Comm
    Atom def_atom;                  // Def: def_atom = def_coeff * H^def_hpow * def_target
    Scalar def_coeff;
    int def_hpow = 0;
    Atom def_target;
    std::vector<AtomKind> family;   // Family
};

struct AxiomDeclStmt {
    std::string name;
    std::vector<RuleDecl> rules;
    SourceSpan span;
};

struct LetStmt {
    std::string name;
    NodePtr value;
    SourceSpan span;
};

struct AssertStmt {
    std::vector<std::string> forall_vars;  // empty for a plain assert
    NodePtr lhs;
    NodePtr rhs;
    std::string set_name;
    SourceSpan span;
};

using Statement = std::variant<AxiomDeclStmt, LetStmt, AssertStmt>;

struct Script {
    std::vector<Statement> statements;
};

}  // namespace opalg::dsl
