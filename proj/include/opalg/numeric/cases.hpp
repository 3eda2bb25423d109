#pragma once

#include "opalg/expr.hpp"
#include "opalg/numeric/operators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace opalg::num {

// Numeric verification cases. Measured residuals are relative:
// ||(LHS - RHS) psi|| / ||psi|| over interior points, maximised over index
// pairs and over the test-function family.
//   massless-cr : [Q_photon_i, P_j]      vs  i p_i p_j / p^2
//   massless-qv : [Q_photon_i, V_j]      vs  0
//   speed       : sum_j V_j V_j          vs  1          (exact multiplications)
//   heisenberg  : [Q_photon_i, H]        vs  i V_i
//   massive-cr  : [Q_canonical_i, P_j]   vs  i delta_ij
//   massive-qv  : [Q_canonical_i, Vm_j]  vs  0          (nonzero analytic limit)
enum class CaseId { MasslessCr, MasslessQv, Speed, Heisenberg, MassiveCr, MassiveQv };

std::optional<CaseId> case_from_name(const std::string& name);
std::string case_name(CaseId c);
const std::vector<CaseId>& all_cases();

struct ResidualParams {
    double sigma = 0.25;
    std::uint64_t seed = 0;
    int family_extra = 2;  // seeded polynomial-times-Gaussian members
};

struct ResidualRow {
    int n = 0;
    double h = 0.0;
    double residual = 0.0;
    std::optional<double> order;  // log2(r(h)/r(h/2)) against the previous row
};

struct ResidualReport {
    std::string id;
    std::vector<ResidualRow> rows;
    std::optional<double> analytic;  // massive-qv: analytic residual limit
    bool exact = false;              // multiplications only, residual at roundoff
    bool pass = false;
    std::string note;
};

// Single-level residual with the case's tolerance policy applied.
ResidualReport residual_case(CaseId c, const GridSpec& spec, const ResidualParams& params);

// Levels n, 2n-1, 4n-3, ... (spacing halves); fits the convergence order per
// adjacent pair. Discretization-limited cases pass iff every order lies in
// [1.7, 2.3]; speed must stay at roundoff; massive-qv must land within 5% of
// its analytic limit and never fall below half of it.
ResidualReport convergence(CaseId c, int levels, const GridSpec& base,
                           const ResidualParams& params);

// Realizes a normal form in the massless momentum representation
// (Q -> Q_photon, natural units) by composing operator applications per atom.
// Throws UnresolvedCommutator on opaque commutator atoms.
WaveFunction realize_expr(const Expr& e, const WaveFunction& psi);

}  // namespace opalg::num
