#pragma once

#include "opalg/atom.hpp"
#include "opalg/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace opalg {

struct Term {
    Scalar coeff;
    Monomial monomial;
};

// Sorts Q-free commuting runs, merges adjacent H powers, drops Id and H^0.
// The relative order of two atoms outside a common commuting family is kept.
Monomial normalize_monomial(Monomial m);

// Exact noncommutative polynomial in normal form. Terms are keyed by
// (monomial, hbar exponent, c exponent); coefficients are gaussian rationals.
// Every construction path normalizes, so an Expr is always canonical:
// no zero coefficients, no duplicate keys, deterministic term order.
class Expr {
public:
    struct Key {
        Monomial monomial;
        int hbar_exp = 0;
        int c_exp = 0;

        friend bool operator<(const Key& a, const Key& b) {
            if (a.monomial != b.monomial) return a.monomial < b.monomial;
            if (a.hbar_exp != b.hbar_exp) return a.hbar_exp < b.hbar_exp;
            return a.c_exp < b.c_exp;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.monomial == b.monomial && a.hbar_exp == b.hbar_exp && a.c_exp == b.c_exp;
        }
    };

    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr identity() { return from_scalar(Scalar::one()); }
    static Expr from_scalar(const Scalar& s);
    static Expr from_atom(const Atom& a);
    static Expr from_term(const Term& t);
    static Expr from_terms(const std::vector<Term>& ts);
    static Expr from_monomial(const Monomial& m) { return from_term({Scalar::one(), m}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::vector<Term> terms() const;

    bool contains_opaque() const;
    std::optional<Atom> first_opaque() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    Expr operator-() const;
    Expr& operator+=(const Expr& o);

    friend Expr operator*(const Scalar& s, const Expr& e);

    friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    void accumulate(Monomial m, int hbar_exp, int c_exp, const GaussRat& q);

    std::map<Key, GaussRat> terms_;
};

inline Expr add(const Expr& a, const Expr& b) { return a + b; }
inline Expr mul(const Expr& a, const Expr& b) { return a * b; }
inline Expr scalar_mul(const Scalar& s, const Expr& e) { return s * e; }

// Re-normalization entry point. Exprs are canonical by construction, so this
// is the identity; it exists so callers can state the round trip explicitly.
inline Expr normalize(const Expr& e) { return e; }

// true iff normalize(a - b) is the zero expression.
inline bool equal(const Expr& a, const Expr& b) { return (a - b).is_zero(); }

}  // namespace opalg
