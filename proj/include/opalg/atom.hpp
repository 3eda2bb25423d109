#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opalg {

// Kind values double as the monomial sort rank: H^n < P < V < Q.
// Id never survives normalization; Comm marks an opaque unresolved commutator.
enum class AtomKind : std::uint8_t { Hpow = 0, P = 1, V = 2, Q = 3, Id = 4, Comm = 5 };

struct Atom {
    AtomKind kind = AtomKind::Id;
    int index = 0;             // 1..3 for Q, P, V
    int power = 0;             // nonzero, Hpow only
    std::vector<Atom> parts;   // exactly two entries, Comm only

    static Atom Qi(int i) { return indexed(AtomKind::Q, i); }
    static Atom Pi(int i) { return indexed(AtomKind::P, i); }
    static Atom Vi(int i) { return indexed(AtomKind::V, i); }
    static Atom H(int pow = 1) {
        if (pow == 0) throw std::invalid_argument("H^0 is the identity, not an atom");
        Atom a;
        a.kind = AtomKind::Hpow;
        a.power = pow;
        return a;
    }
    static Atom id() { return Atom{}; }
    static Atom comm(Atom lhs, Atom rhs) {
        Atom a;
        a.kind = AtomKind::Comm;
        a.parts.push_back(std::move(lhs));
        a.parts.push_back(std::move(rhs));
        return a;
    }

    bool is_indexed() const {
        return kind == AtomKind::Q || kind == AtomKind::P || kind == AtomKind::V;
    }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.kind == b.kind && a.index == b.index && a.power == b.power &&
               a.parts == b.parts;
    }
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }

    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.index != b.index) return a.index < b.index;
        if (a.power != b.power) return a.power < b.power;
        return a.parts < b.parts;
    }

private:
    static Atom indexed(AtomKind k, int i) {
        if (i < 1 || i > 3) throw std::invalid_argument("atom index must be 1..3");
        Atom a;
        a.kind = k;
        a.index = i;
        return a;
    }
};

using Monomial = std::vector<Atom>;

// Fixed normalization family: H powers, momenta and velocities all commute
// with one another; Q never moves past anything (including other Q's).
inline bool kinds_commute(AtomKind a, AtomKind b) {
    auto in_family = [](AtomKind k) {
        return k == AtomKind::Hpow || k == AtomKind::P || k == AtomKind::V;
    };
    return in_family(a) && in_family(b);
}

// Plain textual form used in error messages and reports.
std::string atom_text(const Atom& a);

}  // namespace opalg
