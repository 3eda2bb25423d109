#pragma once

#include "opalg/axioms.hpp"
#include "opalg/errors.hpp"
#include "opalg/expr.hpp"

namespace opalg {

// Expands [a, b] to normal form under the axiom set: bilinearity, antisymmetry,
// the Leibniz rule [A,BC] = [A,B]C + B[A,C], H-power decomposition, the inverse
// power rule [A,H^-1] = -H^-1 [A,H] H^-1 (applied only after checking the side
// condition [H,[A,H]] = 0), base-commutator lookups and, when an atom is the
// target of an invertible definition, resolution through that definition.
// Base pairs none of this resolves are left as oriented opaque commutator atoms.
Expr expand_comm(const Expr& a, const Expr& b, const AxiomSet& ax);

// Heisenberg derivative of an explicitly time-independent operator:
// (1/(i hbar)) [e, H]. Rejects input that already carries opaque commutators.
Expr ddt(const Expr& e, const AxiomSet& ax);

// Replaces every defined atom by its definition (V_i -> c^2 H^-1 P_i) and
// normalizes. Iterates to a fixed point; cyclic user definitions are rejected.
Expr substitute_defs(const Expr& e, const AxiomSet& ax);

// Demands full closure: throws UnresolvedCommutator naming the offending pair
// if any opaque commutator atom remains.
void require_closed(const Expr& e);

}  // namespace opalg
