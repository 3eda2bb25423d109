#pragma once

#include "opalg/axioms.hpp"
#include "opalg/dsl/ast.hpp"

#include <map>
#include <string>
#include <vector>

namespace opalg::dsl {

using IndexEnv = std::map<std::string, int>;
using LetMap = std::map<std::string, NodePtr>;

// Evaluates a node to a normal-form Expr. Commutator and ddt nodes expand
// under `ax`; passing nullptr rejects them. Let references resolve via `lets`.
Expr eval_node(const NodePtr& n, const IndexEnv& env, const AxiomSet* ax,
               const LetMap* lets);

// Ring-only evaluation: scalars, atoms, sums, products. No axiom context.
Expr eval_pure(const NodePtr& n, const IndexEnv& env);

struct AssertOutcome {
    enum class Status { Pass, Fail, Error };
    SourceSpan span;
    std::string index_assignment;  // "1,2" for forall instances, "" otherwise
    Status status = Status::Pass;
    std::string detail;            // normal forms on failure, message on error
};

struct RunReport {
    std::vector<AssertOutcome> outcomes;

    int count(AssertOutcome::Status s) const {
        int n = 0;
        for (const auto& o : outcomes) n += (o.status == s) ? 1 : 0;
        return n;
    }
    // 0 all pass, 1 at least one failed, 2 at least one could not run
    int exit_code() const {
        if (count(AssertOutcome::Status::Error) > 0) return 2;
        if (count(AssertOutcome::Status::Fail) > 0) return 1;
        return 0;
    }
};

// Executes statements in order; forall asserts enumerate index assignments in
// lexicographic order. Deterministic: the same script yields byte-identical
// reports.
RunReport run_script(const Script& script);

}  // namespace opalg::dsl
