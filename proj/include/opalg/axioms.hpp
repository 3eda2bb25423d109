#pragma once

#include "opalg/expr.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace opalg {

// Declared commutator table: base commutators between atoms, mutually
// commuting atom-kind families, atom definitions (V_i = c^2 H^-1 P_i) and
// operator relations (sum_j V_j^2 = c^2 Id). Every entry carries a tag so a
// derivation can be replayed against an exact subset of the axioms.
class AxiomSet {
public:
    struct CommRule {
        Atom a;
        Atom b;
        Expr value;   // value of [a, b]
        std::string tag;
    };
    struct Family {
        std::set<AtomKind> kinds;
        std::string tag;
    };
    // def: atom = coeff * H^hpow * target (the only shape the engine inverts)
    struct DefRule {
        Atom atom;
        Scalar coeff;
        int hpow = 0;
        Atom target;
        std::string tag;
    };
    struct Relation {
        Expr lhs;
        Expr rhs;
        std::string tag;
    };

    std::string name;

    void add_comm(Atom a, Atom b, Expr value, std::string tag);
    void add_family(std::set<AtomKind> kinds, std::string tag);
    void add_def(Atom atom, Scalar coeff, int hpow, Atom target, std::string tag);
    void add_relation(Expr lhs, Expr rhs, std::string tag);

    // Value of [a,b] if (a,b) or (b,a) is declared (antisymmetry applied).
    std::optional<Expr> lookup(const Atom& a, const Atom& b) const;
    bool family_commutes(const Atom& a, const Atom& b) const;
    const DefRule* def_for(const Atom& a) const;
    const DefRule* def_targeting(const Atom& t) const;
    const std::vector<DefRule>& defs() const { return defs_; }
    const std::vector<Relation>& relations() const { return relations_; }

    // Copy containing only entries whose tag is listed.
    AxiomSet filtered(const std::set<std::string>& tags) const;

private:
    std::vector<CommRule> comms_;
    std::vector<Family> families_;
    std::vector<DefRule> defs_;
    std::vector<Relation> relations_;
};

// Axiom tags used by the built-in sets and derivations.
inline constexpr const char* kTagEq1 = "eq1";          // [Q_i, H] = i hbar V_i
inline constexpr const char* kTagEq4 = "eq4";          // [Q_i, V_j] = 0
inline constexpr const char* kTagFree = "free";        // free particle: {H, P, V} commute
inline constexpr const char* kTagSpeed = "speed";      // sum_j V_j^2 = c^2 Id
inline constexpr const char* kTagDefs = "defs";        // V_i = c^2 H^-1 P_i
inline constexpr const char* kTagCanonical = "canonical";  // [Q_i, P_j] = i hbar delta_ij Id

const AxiomSet& massless_axioms();
const AxiomSet& massive_axioms();

}  // namespace opalg
