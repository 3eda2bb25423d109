#pragma once

#include "opalg/axioms.hpp"
#include "opalg/engine.hpp"

#include <set>
#include <string>
#include <vector>

namespace opalg {

enum class DerivationId { Eq3, Eq5, Eq6, SectionA_I, SectionA_II, Dsquare };

// A replayable derivation step. Replay filters the supplied axiom set down to
// axiom_requirements before expanding anything, so a derivation can never
// silently lean on an axiom it does not list.
struct Derivation {
    DerivationId id;
    std::string name;
    std::set<std::string> axiom_requirements;
    std::string summary;
};

struct PairOutcome {
    int i = 0;
    int j = 0;  // 0 when the check is indexed by i only
    bool pass = false;
    Expr lhs;
    Expr rhs;
};

struct CheckResult {
    std::string id;
    bool pass = true;
    std::vector<PairOutcome> rows;
    std::string note;

    const PairOutcome* first_failure() const {
        for (const auto& r : rows)
            if (!r.pass) return &r;
        return nullptr;
    }
};

const std::vector<Derivation>& builtin_derivations();
const Derivation* find_derivation(const std::string& name);

CheckResult replay(const Derivation& d, const AxiomSet& base = massless_axioms());

}  // namespace opalg
