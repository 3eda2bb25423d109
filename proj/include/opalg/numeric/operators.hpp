#pragma once

#include "opalg/numeric/grid.hpp"

#include <string>

namespace opalg::num {

// Momentum-representation realizations. Multiplication operators act
// pointwise and are exact; position operators use the second-order central
// difference stencil and invalidate one more boundary layer.
//   P_i        : multiply by p_i
//   H          : multiply by |p| (massless) or sqrt(p^2 + 1) (massive), to
//                any integer power (power -1 is the inverse Hamiltonian)
//   V_i        : multiply by p_i/|p| or p_i/sqrt(p^2+1)
//   Q_canonical: i d/dp_i
//   Q_photon   : i (p_i p_k / p^2) d/dp_k
struct OperatorDesc {
    enum class Tag { P, Hmassless, Hmassive, Vmassless, Vmassive, Qcanonical, Qphoton };

    Tag tag = Tag::P;
    int index = 1;
    int power = 1;  // H tags only

    static OperatorDesc p(int i) { return {Tag::P, i, 1}; }
    static OperatorDesc h_massless(int pow = 1) { return {Tag::Hmassless, 0, pow}; }
    static OperatorDesc h_massive(int pow = 1) { return {Tag::Hmassive, 0, pow}; }
    static OperatorDesc hinv_massless() { return h_massless(-1); }
    static OperatorDesc hinv_massive() { return h_massive(-1); }
    static OperatorDesc v_massless(int i) { return {Tag::Vmassless, i, 1}; }
    static OperatorDesc v_massive(int i) { return {Tag::Vmassive, i, 1}; }
    static OperatorDesc q_canonical(int i) { return {Tag::Qcanonical, i, 1}; }
    static OperatorDesc q_photon(int i) { return {Tag::Qphoton, i, 1}; }

    bool is_derivative() const { return tag == Tag::Qcanonical || tag == Tag::Qphoton; }
    std::string text() const;
};

WaveFunction apply(const OperatorDesc& op, const WaveFunction& psi);

// a(b(psi)) - b(a(psi))
WaveFunction commutator_apply(const OperatorDesc& a, const OperatorDesc& b,
                              const WaveFunction& psi);

}  // namespace opalg::num
