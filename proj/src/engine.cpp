#include "opalg/engine.hpp"

#include <cstdlib>
#include <set>
#include <utility>

namespace opalg {

namespace {

struct Ctx {
    const AxiomSet& ax;
    // pairs currently being routed through a definition, to cut def cycles
    std::set<std::pair<Atom, Atom>> inflight;
};

Expr comm_mono(const Monomial& a, const Monomial& b, Ctx& ctx);

Expr h_expr(int pow) {
    return pow == 0 ? Expr::identity() : Expr::from_atom(Atom::H(pow));
}

// [x, H^-1] = -H^-1 [x, H] H^-1, usable only when [x, H] resolves and
// commutes with H.
std::optional<Expr> try_inverse_power(const Atom& x, Ctx& ctx) {
    Expr inner = comm_mono(Monomial{x}, Monomial{Atom::H(1)}, ctx);
    if (inner.contains_opaque()) return std::nullopt;
    Expr side = expand_comm(h_expr(1), inner, ctx.ax);
    if (!side.is_zero()) return std::nullopt;
    return -(h_expr(-1) * inner * h_expr(-1));
}

// Commutator against an atom that is the target of a definition, e.g.
// [Q_i, P_j] with P_j = c^-2 H V_j from V_j = c^2 H^-1 P_j. The detour through
// the defining vocabulary is undone on the resolved value so the answer comes
// back in the caller's atoms.
std::optional<Expr> try_def_target(const Atom& a, const Atom& b, Ctx& ctx) {
    const auto* d = ctx.ax.def_targeting(b);
    if (d == nullptr) return std::nullopt;
    auto key = std::make_pair(a, b);
    if (ctx.inflight.count(key)) return std::nullopt;
    ctx.inflight.insert(key);
    Expr b_rewritten = d->coeff.inverse() * (h_expr(-d->hpow) * Expr::from_atom(d->atom));
    Expr r = Expr::zero();
    for (const auto& t : b_rewritten.terms())
        r += t.coeff * comm_mono(Monomial{a}, t.monomial, ctx);
    ctx.inflight.erase(key);
    return substitute_defs(r, ctx.ax);
}

Expr opaque(const Atom& a, const Atom& b) {
    // Oriented so the later atom in the total order sits on the left; the
    // mirror pair is then its negation by construction.
    if (a < b) return -Expr::from_atom(Atom::comm(b, a));
    return Expr::from_atom(Atom::comm(a, b));
}

Expr resolve_pair(const Atom& a, const Atom& b, Ctx& ctx) {
    if (a == b) return Expr::zero();
    if (a.kind == AtomKind::Id || b.kind == AtomKind::Id) return Expr::zero();

    if (auto v = ctx.ax.lookup(a, b)) return *v;
    if (ctx.ax.family_commutes(a, b)) return Expr::zero();

    // Split multi-step H powers so only H^{+-1} reaches the rules below.
    if (b.kind == AtomKind::Hpow && std::abs(b.power) > 1) {
        int s = b.power > 0 ? 1 : -1;
        return comm_mono(Monomial{a}, Monomial{Atom::H(s), Atom::H(b.power - s)}, ctx);
    }
    if (a.kind == AtomKind::Hpow && std::abs(a.power) > 1) {
        int s = a.power > 0 ? 1 : -1;
        return -comm_mono(Monomial{b}, Monomial{Atom::H(s), Atom::H(a.power - s)}, ctx);
    }

    if (b.kind == AtomKind::Hpow && b.power == -1) {
        if (auto r = try_inverse_power(a, ctx)) return *r;
    }
    if (a.kind == AtomKind::Hpow && a.power == -1) {
        if (auto r = try_inverse_power(b, ctx)) return -*r;
    }

    if (auto r = try_def_target(a, b, ctx)) return *r;
    if (auto r = try_def_target(b, a, ctx)) return -*r;

    return opaque(a, b);
}

Expr comm_mono(const Monomial& a, const Monomial& b, Ctx& ctx) {
    if (a.empty() || b.empty()) return Expr::zero();
    if (a.size() == 1 && b.size() == 1) return resolve_pair(a[0], b[0], ctx);

    if (b.size() > 1) {
        // [A, b0 R] = [A, b0] R + b0 [A, R]
        Monomial rest(b.begin() + 1, b.end());
        return comm_mono(a, Monomial{b[0]}, ctx) * Expr::from_monomial(rest) +
               Expr::from_atom(b[0]) * comm_mono(a, rest, ctx);
    }
    // [a0 R, B] = a0 [R, B] + [a0, B] R
    Monomial rest(a.begin() + 1, a.end());
    return Expr::from_atom(a[0]) * comm_mono(rest, b, ctx) +
           comm_mono(Monomial{a[0]}, b, ctx) * Expr::from_monomial(rest);
}

}  // namespace

Expr expand_comm(const Expr& a, const Expr& b, const AxiomSet& ax) {
    Ctx ctx{ax, {}};
    Expr r = Expr::zero();
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            r += (ta.coeff * tb.coeff) * comm_mono(ta.monomial, tb.monomial, ctx);
    return r;
}

Expr ddt(const Expr& e, const AxiomSet& ax) {
    if (auto op = e.first_opaque()) throw UnresolvedCommutator(atom_text(*op));
    // 1/(i hbar) = -i / hbar
    Scalar inv_i_hbar(GaussRat(Rational(0), Rational(-1)), -1, 0);
    return inv_i_hbar * expand_comm(e, Expr::from_atom(Atom::H(1)), ax);
}

Expr substitute_defs(const Expr& e, const AxiomSet& ax) {
    Expr cur = e;
    for (int pass = 0; pass < 8; ++pass) {
        bool changed = false;
        Expr next = Expr::zero();
        for (const auto& t : cur.terms()) {
            Expr prod = Expr::from_scalar(t.coeff);
            for (const auto& atom : t.monomial) {
                if (const auto* d = ax.def_for(atom)) {
                    prod = prod * (d->coeff * (h_expr(d->hpow) * Expr::from_atom(d->target)));
                    changed = true;
                } else {
                    prod = prod * Expr::from_atom(atom);
                }
            }
            next += prod;
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
    throw std::runtime_error("definition substitution did not reach a fixed point (cyclic defs?)");
}

void require_closed(const Expr& e) {
    if (auto op = e.first_opaque()) throw UnresolvedCommutator(atom_text(*op));
}

}  // namespace opalg
