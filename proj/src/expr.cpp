#include "opalg/expr.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace opalg {

std::string atom_text(const Atom& a) {
    std::ostringstream os;
    switch (a.kind) {
        case AtomKind::Q: os << "Q[" << a.index << "]"; break;
        case AtomKind::P: os << "P[" << a.index << "]"; break;
        case AtomKind::V: os << "V[" << a.index << "]"; break;
        case AtomKind::Id: os << "Id"; break;
        case AtomKind::Hpow:
            os << "H";
            if (a.power != 1) os << "^" << a.power;
            break;
        case AtomKind::Comm:
            os << "comm(" << atom_text(a.parts[0]) << "," << atom_text(a.parts[1]) << ")";
            break;
    }
    return os.str();
}

Monomial normalize_monomial(Monomial m) {
    // Drop identities.
    m.erase(std::remove_if(m.begin(), m.end(),
                           [](const Atom& a) { return a.kind == AtomKind::Id; }),
            m.end());

    // Stable insertion sort that only ever swaps commuting neighbours, so the
    // relative order across a non-commuting pair is untouched.
    for (std::size_t i = 1; i < m.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && kinds_commute(m[j - 1].kind, m[j].kind) && m[j] < m[j - 1]) {
            std::swap(m[j - 1], m[j]);
            --j;
        }
    }

    // Merge adjacent H powers; drop H^0.
    Monomial out;
    out.reserve(m.size());
    for (auto& a : m) {
        if (!out.empty() && out.back().kind == AtomKind::Hpow && a.kind == AtomKind::Hpow) {
            out.back().power += a.power;
            if (out.back().power == 0) out.pop_back();
        } else {
            out.push_back(std::move(a));
        }
    }
    return out;
}

void Expr::accumulate(Monomial m, int hbar_exp, int c_exp, const GaussRat& q) {
    if (q.is_zero()) return;
    Key k{std::move(m), hbar_exp, c_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), q);
        return;
    }
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
}

Expr Expr::from_scalar(const Scalar& s) {
    Expr e;
    e.accumulate(Monomial{}, s.hbar_exp, s.c_exp, s.q);
    return e;
}

Expr Expr::from_atom(const Atom& a) {
    Expr e;
    e.accumulate(normalize_monomial(Monomial{a}), 0, 0, GaussRat(Rational(1)));
    return e;
}

Expr Expr::from_term(const Term& t) {
    Expr e;
    e.accumulate(normalize_monomial(t.monomial), t.coeff.hbar_exp, t.coeff.c_exp, t.coeff.q);
    return e;
}

Expr Expr::from_terms(const std::vector<Term>& ts) {
    Expr e;
    for (const auto& t : ts)
        e.accumulate(normalize_monomial(t.monomial), t.coeff.hbar_exp, t.coeff.c_exp, t.coeff.q);
    return e;
}

std::vector<Term> Expr::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, q] : terms_)
        out.push_back(Term{Scalar(q, k.hbar_exp, k.c_exp), k.monomial});
    return out;
}

static bool atom_has_opaque(const Atom& a) {
    return a.kind == AtomKind::Comm;
}

bool Expr::contains_opaque() const {
    for (const auto& [k, q] : terms_)
        for (const auto& a : k.monomial)
            if (atom_has_opaque(a)) return true;
    return false;
}

std::optional<Atom> Expr::first_opaque() const {
    for (const auto& [k, q] : terms_)
        for (const auto& a : k.monomial)
            if (atom_has_opaque(a)) return a;
    return std::nullopt;
}

Expr operator+(const Expr& a, const Expr& b) {
    Expr r = a;
    for (const auto& [k, q] : b.terms_) r.accumulate(k.monomial, k.hbar_exp, k.c_exp, q);
    return r;
}

Expr& Expr::operator+=(const Expr& o) { return *this = *this + o; }

Expr Expr::operator-() const {
    Expr r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, -q);
    return r;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ka, qa] : a.terms_) {
        for (const auto& [kb, qb] : b.terms_) {
            Monomial m = ka.monomial;
            m.insert(m.end(), kb.monomial.begin(), kb.monomial.end());
            r.accumulate(normalize_monomial(std::move(m)), ka.hbar_exp + kb.hbar_exp,
                         ka.c_exp + kb.c_exp, qa * qb);
        }
    }
    return r;
}

Expr operator*(const Scalar& s, const Expr& e) {
    Expr r;
    if (s.is_zero()) return r;
    for (const auto& [k, q] : e.terms_)
        r.accumulate(k.monomial, k.hbar_exp + s.hbar_exp, k.c_exp + s.c_exp, q * s.q);
    return r;
}

}  // namespace opalg
