#include "opalg/axioms.hpp"

#include <utility>

namespace opalg {

void AxiomSet::add_comm(Atom a, Atom b, Expr value, std::string tag) {
    comms_.push_back(CommRule{std::move(a), std::move(b), std::move(value), std::move(tag)});
}

void AxiomSet::add_family(std::set<AtomKind> kinds, std::string tag) {
    families_.push_back(Family{std::move(kinds), std::move(tag)});
}

void AxiomSet::add_def(Atom atom, Scalar coeff, int hpow, Atom target, std::string tag) {
    defs_.push_back(DefRule{std::move(atom), std::move(coeff), hpow, std::move(target),
                            std::move(tag)});
}

void AxiomSet::add_relation(Expr lhs, Expr rhs, std::string tag) {
    relations_.push_back(Relation{std::move(lhs), std::move(rhs), std::move(tag)});
}

std::optional<Expr> AxiomSet::lookup(const Atom& a, const Atom& b) const {
    for (const auto& r : comms_) {
        if (r.a == a && r.b == b) return r.value;
        if (r.a == b && r.b == a) return -r.value;
    }
    return std::nullopt;
}

bool AxiomSet::family_commutes(const Atom& a, const Atom& b) const {
    for (const auto& f : families_)
        if (f.kinds.count(a.kind) && f.kinds.count(b.kind)) return true;
    return false;
}

const AxiomSet::DefRule* AxiomSet::def_for(const Atom& a) const {
    for (const auto& d : defs_)
        if (d.atom == a) return &d;
    return nullptr;
}

const AxiomSet::DefRule* AxiomSet::def_targeting(const Atom& t) const {
    for (const auto& d : defs_)
        if (d.target == t) return &d;
    return nullptr;
}

AxiomSet AxiomSet::filtered(const std::set<std::string>& tags) const {
    AxiomSet out;
    out.name = name + "~restricted";
    for (const auto& r : comms_)
        if (tags.count(r.tag)) out.comms_.push_back(r);
    for (const auto& f : families_)
        if (tags.count(f.tag)) out.families_.push_back(f);
    for (const auto& d : defs_)
        if (tags.count(d.tag)) out.defs_.push_back(d);
    for (const auto& r : relations_)
        if (tags.count(r.tag)) out.relations_.push_back(r);
    return out;
}

namespace {

Scalar i_hbar() { return Scalar(GaussRat::i_unit(), 1, 0); }

void add_kinematics(AxiomSet& ax) {
    // Heisenberg equation for the position operator, with the velocity as a
    // first-class atom: [Q_i, H] = i hbar V_i.
    for (int i = 1; i <= 3; ++i)
        ax.add_comm(Atom::Qi(i), Atom::H(1), i_hbar() * Expr::from_atom(Atom::Vi(i)), kTagEq1);

    // Free particle: H powers, momenta and velocities mutually commute.
    ax.add_family({AtomKind::Hpow, AtomKind::P, AtomKind::V}, kTagFree);

    // V_i = c^2 H^-1 P_i.
    for (int i = 1; i <= 3; ++i)
        ax.add_def(Atom::Vi(i), Scalar::c(2), -1, Atom::Pi(i), kTagDefs);
}

AxiomSet build_massless() {
    AxiomSet ax;
    ax.name = "Massless";
    add_kinematics(ax);

    // The velocity is a constant operator: [Q_i, V_j] = 0.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            ax.add_comm(Atom::Qi(i), Atom::Vi(j), Expr::zero(), kTagEq4);

    // Fixed speed: sum_j V_j^2 = c^2 Id.
    Expr speed_lhs = Expr::zero();
    for (int j = 1; j <= 3; ++j)
        speed_lhs += Expr::from_atom(Atom::Vi(j)) * Expr::from_atom(Atom::Vi(j));
    ax.add_relation(speed_lhs, Scalar::c(2) * Expr::identity(), kTagSpeed);
    return ax;
}

AxiomSet build_massive() {
    AxiomSet ax;
    ax.name = "Massive";
    add_kinematics(ax);

    // Canonical relation: [Q_i, P_j] = i hbar delta_ij Id.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            ax.add_comm(Atom::Qi(i), Atom::Pi(j),
                        i == j ? i_hbar() * Expr::identity() : Expr::zero(), kTagCanonical);
    return ax;
}

}  // namespace

const AxiomSet& massless_axioms() {
    static const AxiomSet ax = build_massless();
    return ax;
}

const AxiomSet& massive_axioms() {
    static const AxiomSet ax = build_massive();
    return ax;
}

}  // namespace opalg
